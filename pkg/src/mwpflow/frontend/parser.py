"""Tokenizer and recursive-descent parser for the C-like input language.

Accepted shape::

    int f(int X1, int X2) {
        int Y;
        Y = X1 + X2 * X2;
        if (X1 < 3) { X2 = Y; } else X2 = X1;
        while (Y > 0) { Y = Y - X1; }
        loop X1 { X2 = X2 + X1; }
        X1 = g(X2, X2);
        return X2;
    }

Lines starting with ``#`` are skipped, ``//`` and ``/* */`` comments are
ignored.  Conditions may use variables, integer literals, comparisons and
``&&``/``||``/``!``; arithmetic may only use variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Pos, Program, Var, While


class FrontendError(Exception):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class ParseError(FrontendError):
    """Input does not match the grammar; ``expected`` says what would have."""

    def __init__(self, line: int, col: int, expected: str, found: str):
        super().__init__(line, col, f"expected {expected}, found {found}")
        self.expected = expected
        self.found = found


class UnsupportedConstruct(FrontendError):
    pass


class NameResolutionError(FrontendError):
    pass


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<pp>\#[^\n]*)
  | (?P<lc>//[^\n]*)
  | (?P<bc>/\*.*?\*/)
  | (?P<num>\d+)
  | (?P<id>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>&&|\|\||<=|>=|==|!=|\+\+|--|\+=|-=|\*=|->|[-+*/%<>=!(){};,\[\]&.?:~^|])
    """,
    re.VERBOSE | re.DOTALL,
)

_UNSUPPORTED_WORDS = {
    "for": "'for' loops",
    "do": "'do-while' loops",
    "struct": "composite types",
    "union": "composite types",
    "char": "non-int types",
    "float": "non-int types",
    "double": "non-int types",
    "long": "non-int types",
    "short": "non-int types",
    "unsigned": "non-int types",
    "signed": "non-int types",
    "goto": "'goto'",
    "switch": "'switch'",
    "break": "'break'",
    "continue": "'continue'",
}
_KEYWORDS = {"int", "void", "if", "else", "while", "loop", "return"}
_COND_TOKENS = {"&&", "||", "<=", ">=", "==", "!=", "<", ">", "!", "+", "-", "*", "/", "%"}


@dataclass(frozen=True)
class Token:
    kind: str  # "id", "num", "op", "eof"
    text: str
    line: int
    col: int

    @property
    def pos(self) -> Pos:
        return (self.line, self.col)

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, i = 1, 0, 0
    at_line_start = True
    while i < len(source):
        m = _TOKEN_RE.match(source, i)
        col = i - line_start + 1
        if m is None:
            raise ParseError(line, col, "a token", repr(source[i]))
        kind = m.lastgroup
        text = m.group()
        if kind == "pp" and not at_line_start:
            raise ParseError(line, col, "a token", "'#'")
        if kind in ("num", "id", "op"):
            tokens.append(Token(kind, text, line, col))
            at_line_start = False
        elif kind == "nl":
            at_line_start = True
        # multi-line block comments advance the line counter
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + text.rindex("\n") + 1
        i = m.end()
    tokens.append(Token("eof", "", line, i - line_start + 1))
    return tokens


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0
        self.declared: dict[str, int] = {}
        self.current: str | None = None
        self.current_arity = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "id") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def fail(self, expected: str):
        t = self.tok
        self.check_unsupported(t)
        raise ParseError(t.line, t.col, expected, t.describe())

    def check_unsupported(self, t: Token) -> None:
        if t.kind == "id" and t.text in _UNSUPPORTED_WORDS:
            raise UnsupportedConstruct(t.line, t.col, f"{_UNSUPPORTED_WORDS[t.text]} are not supported")
        if t.kind == "op" and t.text in ("[", "]"):
            raise UnsupportedConstruct(t.line, t.col, "arrays are not supported")
        if t.kind == "op" and t.text in ("&", "->"):
            raise UnsupportedConstruct(t.line, t.col, "pointers are not supported")

    def name(self) -> Token:
        t = self.tok
        if t.kind != "id" or t.text in _KEYWORDS:
            self.fail("an identifier")
        self.check_unsupported(t)
        if "__" in t.text:
            raise ParseError(t.line, t.col, "an identifier without '__' (reserved for generated names)", repr(t.text))
        return self.advance()

    # declarations

    def program(self) -> Program:
        decls = []
        while self.tok.kind != "eof":
            decls.append(self.fundecl())
        if not decls:
            self.fail("a function declaration")
        return Program(tuple(decls))

    def fundecl(self) -> FunDecl:
        start = self.tok
        if self.at("int") or self.at("void"):
            returns_value = self.advance().text == "int"
        else:
            self.fail("'int' or 'void'")
        if self.at("*"):
            raise UnsupportedConstruct(self.tok.line, self.tok.col, "pointers are not supported")
        name_tok = self.name()
        if name_tok.text in self.declared:
            raise NameResolutionError(name_tok.line, name_tok.col, f"function {name_tok.text!r} declared twice")
        self.expect("(")
        params: list[str] = []
        if self.at("void") and self.peek().text == ")":
            self.advance()
        elif not self.at(")"):
            params.append(self.param())
            while self.at(","):
                self.advance()
                params.append(self.param())
        self.expect(")")
        if len(set(params)) != len(params):
            raise NameResolutionError(name_tok.line, name_tok.col, "duplicate parameter name")
        self.current, self.current_arity = name_tok.text, len(params)
        self.expect("{")
        body: list[Cmd] = []
        ret = None
        while not self.at("}"):
            if self.at("return"):
                rt = self.advance()
                if not returns_value:
                    raise ParseError(rt.line, rt.col, "no return value in a void function", "'return'")
                ret = self.name().text
                self.expect(";")
                if not self.at("}"):
                    self.fail("'}' after the return statement")
                break
            body.extend(self.stmt())
        end = self.expect("}")
        self.declared[name_tok.text] = len(params)
        self.current = None
        return FunDecl(
            name_tok.text, tuple(params), tuple(body), ret, start.pos, line_count=end.line - start.line + 1
        )

    def param(self) -> str:
        if self.at("int"):
            self.advance()
        if self.at("*"):
            raise UnsupportedConstruct(self.tok.line, self.tok.col, "pointers are not supported")
        n = self.name().text
        if self.at("["):
            self.check_unsupported(self.tok)
        return n

    # statements

    def block(self) -> list[Cmd]:
        if self.at("{"):
            self.advance()
            out: list[Cmd] = []
            while not self.at("}"):
                if self.at("return"):
                    self.fail("a statement (return is only allowed at the end of a function)")
                out.extend(self.stmt())
            self.advance()
            return out
        return self.stmt()

    def stmt(self) -> list[Cmd]:
        t = self.tok
        if self.at(";"):
            self.advance()
            return []
        if self.at("{"):
            return self.block()
        if self.at("int"):
            self.advance()
            if self.at("*"):
                raise UnsupportedConstruct(self.tok.line, self.tok.col, "pointers are not supported")
            target = self.name()
            if self.at("["):
                self.check_unsupported(self.tok)
            if self.at(";"):
                self.advance()
                return []
            self.expect("=")
            cmd = self.rhs(target)
            self.expect(";")
            return [cmd]
        if self.at("if"):
            self.advance()
            self.condition()
            then = self.block()
            orelse: list[Cmd] = []
            if self.at("else"):
                self.advance()
                orelse = self.block()
            return [If(tuple(then), tuple(orelse), t.pos)]
        if self.at("while"):
            self.advance()
            self.condition()
            return [While(tuple(self.block()), t.pos)]
        if self.at("loop"):
            self.advance()
            counter = self.name().text
            return [Loop(counter, tuple(self.block()), t.pos)]
        if t.kind == "id" and t.text not in _KEYWORDS:
            target = self.name()
            if not self.at("="):
                self.check_unsupported(self.tok)
                if self.tok.text in ("++", "--", "+=", "-=", "*="):
                    raise UnsupportedConstruct(self.tok.line, self.tok.col, "compound assignment is not supported")
                self.fail("'='")
            self.advance()
            cmd = self.rhs(target)
            self.expect(";")
            return [cmd]
        self.fail("a statement")

    def rhs(self, target: Token) -> Cmd:
        if self.tok.kind == "id" and self.peek().text == "(" and self.tok.text not in _KEYWORDS:
            callee = self.name()
            self.expect("(")
            args: list[str] = []
            if not self.at(")"):
                args.append(self.name().text)
                while self.at(","):
                    self.advance()
                    args.append(self.name().text)
            self.expect(")")
            if callee.text == self.current:
                arity = self.current_arity
            elif callee.text in self.declared:
                arity = self.declared[callee.text]
            else:
                raise NameResolutionError(callee.line, callee.col, f"call to undeclared function {callee.text!r}")
            if arity != len(args):
                raise NameResolutionError(
                    callee.line, callee.col, f"{callee.text!r} takes {arity} arguments, {len(args)} given"
                )
            return CallAssign(target.text, callee.text, tuple(args), target.pos)
        return Assign(target.text, self.expr(), target.pos)

    # expressions

    def expr(self) -> Expr:
        e = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            e = Bin(op.text, e, self.term(), op.pos)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.at("*") or self.at("/") or self.at("%"):
            op = self.advance()
            if op.text != "*":
                raise UnsupportedConstruct(op.line, op.col, f"operator {op.text!r} is not supported")
            e = Bin("*", e, self.factor(), op.pos)
        return e

    def factor(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            raise UnsupportedConstruct(t.line, t.col, "integer literals are only allowed in conditions")
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if self.at("-"):
            raise UnsupportedConstruct(t.line, t.col, "unary minus is not supported")
        return Var(self.name().text, t.pos)

    def condition(self) -> None:
        # checked for well-formedness, then discarded
        self.expect("(")
        depth = 1
        operand_seen = False
        while depth:
            t = self.tok
            if t.kind == "eof":
                self.fail("')'")
            if self.at("("):
                depth += 1
            elif self.at(")"):
                depth -= 1
            elif t.kind in ("id", "num"):
                if t.kind == "id":
                    self.name()
                    operand_seen = True
                    continue
                operand_seen = True
            elif t.text not in _COND_TOKENS:
                self.check_unsupported(t)
                self.fail("a condition")
            self.advance()
        if not operand_seen:
            t = self.tokens[self.i - 1]
            raise ParseError(t.line, t.col, "a non-empty condition", "')'")


def parse(source: str) -> Program:
    return Parser(source).program()


def parse_file(path: str) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
