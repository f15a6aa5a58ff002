"""Source-level transformations: three-address form, variable sets, inlining."""

from __future__ import annotations

from dataclasses import replace

from .ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Program, Var, While, expr_vars


class InliningError(ValueError):
    pass


def _flatten(e: Expr, emit: list[Cmd], fresh) -> Var:
    if isinstance(e, Var):
        return e
    flat = _flatten_top(e, emit, fresh)
    name = fresh()
    emit.append(Assign(name, flat, e.pos))
    return Var(name, e.pos)


def _flatten_top(e: Expr, emit: list[Cmd], fresh) -> Expr:
    if isinstance(e, Var) or e.is_flat():
        return e
    left = _flatten(e.left, emit, fresh)
    right = _flatten(e.right, emit, fresh)
    return Bin(e.op, left, right, e.pos)


def normalize_function(f: FunDecl) -> FunDecl:
    counter = 0

    def fresh() -> str:
        nonlocal counter
        name = f"__t{counter}"
        counter += 1
        return name

    def go(cmds: tuple[Cmd, ...]) -> tuple[Cmd, ...]:
        out: list[Cmd] = []
        for c in cmds:
            if isinstance(c, Assign):
                expr = _flatten_top(c.expr, out, fresh)
                out.append(Assign(c.target, expr, c.pos) if expr is not c.expr else c)
            elif isinstance(c, If):
                out.append(If(go(c.then), go(c.orelse), c.pos))
            elif isinstance(c, While):
                out.append(While(go(c.body), c.pos))
            elif isinstance(c, Loop):
                out.append(Loop(c.counter, go(c.body), c.pos))
            else:
                out.append(c)
        return tuple(out)

    return replace(f, body=go(f.body))


def normalize_three_address(p: Program) -> Program:
    return Program(tuple(normalize_function(f) for f in p.decls))


def _occurrences(cmds: tuple[Cmd, ...]):
    for c in cmds:
        if isinstance(c, Assign):
            yield c.target
            yield from expr_vars(c.expr)
        elif isinstance(c, CallAssign):
            yield c.target
            yield from c.args
        elif isinstance(c, If):
            yield from _occurrences(c.then)
            yield from _occurrences(c.orelse)
        elif isinstance(c, While):
            yield from _occurrences(c.body)
        elif isinstance(c, Loop):
            yield c.counter
            yield from _occurrences(c.body)


def collect_vars(f: FunDecl) -> list[str]:
    """Parameters, then every other variable in order of first occurrence."""
    out = list(f.params)
    seen = set(out)
    names = list(_occurrences(f.body))
    if f.ret is not None:
        names.append(f.ret)
    for name in names:
        if name not in seen:
            seen.add(name)
            out.append(name)
    return out


def _rename_expr(e: Expr, ren: dict[str, str]) -> Expr:
    if isinstance(e, Var):
        return Var(ren.get(e.name, e.name), e.pos)
    return Bin(e.op, _rename_expr(e.left, ren), _rename_expr(e.right, ren), e.pos)


def rename_cmds(cmds: tuple[Cmd, ...], ren: dict[str, str]) -> tuple[Cmd, ...]:
    out: list[Cmd] = []
    for c in cmds:
        if isinstance(c, Assign):
            out.append(Assign(ren.get(c.target, c.target), _rename_expr(c.expr, ren), c.pos))
        elif isinstance(c, CallAssign):
            out.append(CallAssign(ren.get(c.target, c.target), c.callee, tuple(ren.get(a, a) for a in c.args), c.pos))
        elif isinstance(c, If):
            out.append(If(rename_cmds(c.then, ren), rename_cmds(c.orelse, ren), c.pos))
        elif isinstance(c, While):
            out.append(While(rename_cmds(c.body, ren), c.pos))
        elif isinstance(c, Loop):
            out.append(Loop(ren.get(c.counter, c.counter), rename_cmds(c.body, ren), c.pos))
    return tuple(out)


def _replace_call(cmds: tuple[Cmd, ...], site: CallAssign, chunk: tuple[Cmd, ...]) -> tuple[tuple[Cmd, ...], bool]:
    out: list[Cmd] = []
    done = False
    for c in cmds:
        if not done and c is site:
            out.extend(chunk)
            done = True
        elif not done and isinstance(c, If):
            then, d1 = _replace_call(c.then, site, chunk)
            orelse, d2 = (c.orelse, False) if d1 else _replace_call(c.orelse, site, chunk)
            done = d1 or d2
            out.append(If(then, orelse, c.pos) if done else c)
        elif not done and isinstance(c, (While, Loop)):
            body, done = _replace_call(c.body, site, chunk)
            out.append(replace(c, body=body) if done else c)
        else:
            out.append(c)
    return tuple(out), done


def inline_call(caller: FunDecl, site: CallAssign, callee: FunDecl) -> FunDecl:
    """Replace the call ``site`` (matched by identity) with the callee's body.

    Parameters become fresh copies ``X__p`` of the arguments, the returned
    variable becomes ``__R`` and other callee variables get fresh names, so
    the caller's variables are only touched by the final ``target = __R``.
    """
    if callee.ret is None:
        raise InliningError(f"{callee.name!r} returns no value")
    if any(c.callee == callee.name for c in _calls(callee.body)):
        raise InliningError(f"{callee.name!r} is recursive")
    taken = set(collect_vars(caller))

    def fresh(base: str) -> str:
        name, k = base, 1
        while name in taken:
            name = f"{base}{k}"
            k += 1
        taken.add(name)
        return name

    ren: dict[str, str] = {}
    ret_name = fresh("__R")
    ren[callee.ret] = ret_name
    for p in callee.params:
        if p != callee.ret:
            ren[p] = fresh(f"{p}__p")
    for v in collect_vars(callee):
        if v not in ren:
            ren[v] = fresh(f"{v}__l")
    chunk: list[Cmd] = []
    for p, a in zip(callee.params, site.args):
        chunk.append(Assign(ren[p], Var(a, site.pos), site.pos))
    chunk.extend(rename_cmds(callee.body, ren))
    chunk.append(Assign(site.target, Var(ret_name, site.pos), site.pos))
    body, done = _replace_call(caller.body, site, tuple(chunk))
    if not done:
        raise InliningError("call site not found in caller")
    return replace(caller, body=body)


def _calls(cmds: tuple[Cmd, ...]):
    for c in cmds:
        if isinstance(c, CallAssign):
            yield c
        elif isinstance(c, If):
            yield from _calls(c.then)
            yield from _calls(c.orelse)
        elif isinstance(c, (While, Loop)):
            yield from _calls(c.body)
