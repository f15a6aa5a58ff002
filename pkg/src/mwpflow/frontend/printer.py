"""Render syntax trees back to parsable source."""

from __future__ import annotations

from .ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Program, Var, While

_PREC = {"+": 1, "-": 1, "*": 2}


def format_expr(e: Expr, parent: int = 0, right: bool = False) -> str:
    if isinstance(e, Var):
        return e.name
    prec = _PREC[e.op]
    text = f"{format_expr(e.left, prec)} {e.op} {format_expr(e.right, prec, True)}"
    # left-associative: a right operand of equal precedence needs parentheses
    if prec < parent or (right and prec == parent):
        return f"({text})"
    return text


def format_cmds(cmds: tuple[Cmd, ...], indent: int) -> list[str]:
    pad = "    " * indent
    out: list[str] = []
    for c in cmds:
        if isinstance(c, Assign):
            out.append(f"{pad}{c.target} = {format_expr(c.expr)};")
        elif isinstance(c, CallAssign):
            out.append(f"{pad}{c.target} = {c.callee}({', '.join(c.args)});")
        elif isinstance(c, If):
            out.append(f"{pad}if (b) {{")
            out.extend(format_cmds(c.then, indent + 1))
            if c.orelse:
                out.append(f"{pad}}} else {{")
                out.extend(format_cmds(c.orelse, indent + 1))
            out.append(f"{pad}}}")
        elif isinstance(c, While):
            out.append(f"{pad}while (b) {{")
            out.extend(format_cmds(c.body, indent + 1))
            out.append(f"{pad}}}")
        elif isinstance(c, Loop):
            out.append(f"{pad}loop {c.counter} {{")
            out.extend(format_cmds(c.body, indent + 1))
            out.append(f"{pad}}}")
        else:
            raise TypeError(f"not a command: {c!r}")
    return out


def format_function(f: FunDecl) -> str:
    kind = "int" if f.ret is not None else "void"
    lines = [f"{kind} {f.name}({', '.join('int ' + p for p in f.params)}) {{"]
    lines.extend(format_cmds(f.body, 1))
    if f.ret is not None:
        lines.append(f"    return {f.ret};")
    lines.append("}")
    return "\n".join(lines)


def format_program(p: Program) -> str:
    return "\n\n".join(format_function(f) for f in p.decls) + "\n"
