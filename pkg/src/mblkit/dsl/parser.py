"""Lexer and recursive-descent parser for layout action programs.

The accepted surface is the C#-like snippet form: constructor calls
(``new Module(...)``), static helper calls (``Utils.SplitModule(...)``),
``new List<T> { ... }`` literals and list indexing used to unpack a split.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .ast import INITIAL_POINT, ActionStatement, Arg, Diagnostic, ListLit, PointLit, Program, Ref
from .signatures import BY_CALLEE, ENUMS, REF_TYPES, Param, Signature

KEYWORDS = {"new", "true", "false"}
PUNCT = set("(){}[]<>,;:=.-")

_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | keyword | number | text | punct | eof
    lexeme: str
    span: tuple[int, int]


class SyntaxErr(Exception):
    def __init__(self, message, span):
        super().__init__(message)
        self.span = span


def tokenize(source: str) -> tuple[list[Token], list[Diagnostic]]:
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r﻿":
            i += 1
            col += 1
            continue
        if c == "\\" and i + 1 < n and source[i + 1] == "n":
            # dataset files carry escaped newlines between statements
            i += 2
            line += 1
            col = 1
            continue
        span = (line, col)
        if c == '"':
            j = i + 1
            buf = []
            while j < n and source[j] != '"':
                if source[j] == "\\" and j + 1 < n:
                    buf.append(source[j + 1])
                    j += 2
                    continue
                if source[j] == "\n":
                    break
                buf.append(source[j])
                j += 1
            if j >= n or source[j] != '"':
                diags.append(Diagnostic("error", "syntax", "unterminated string literal", span))
                tokens.append(Token("text", "".join(buf), span))
                col += j - i
                i = j
                continue
            tokens.append(Token("text", "".join(buf), span))
            col += j + 1 - i
            i = j + 1
            continue
        m = _NUMBER.match(source, i)
        if m:
            tokens.append(Token("number", m.group(), span))
            col += m.end() - i
            i = m.end()
            continue
        m = _IDENT.match(source, i)
        if m:
            word = m.group()
            tokens.append(Token("keyword" if word in KEYWORDS else "identifier", word, span))
            col += m.end() - i
            i = m.end()
            continue
        if c in PUNCT:
            tokens.append(Token("punct", c, span))
            i += 1
            col += 1
            continue
        diags.append(Diagnostic("error", "syntax", f"unexpected character {c!r}", span))
        tokens.append(Token("bad", c, span))
        i += 1
        col += 1
    tokens.append(Token("eof", "", (line, col)))
    return tokens, diags


# -- argument resolution ------------------------------------------------------

def value_kind(v, kinds: dict[str, str]) -> str:
    if isinstance(v, bool):
        return "bool"
    if isinstance(v, (int, float)):
        return "num"
    if isinstance(v, str):
        return "str"
    if isinstance(v, PointLit):
        return "point"
    if isinstance(v, Ref):
        if v.name == INITIAL_POINT:
            return "point"
        return kinds.get(v.name, "?")
    if isinstance(v, ListLit):
        return "list:" + v.elem_type
    return "?"


def accepts(p: Param, v, kinds: dict[str, str], strict: bool = True) -> bool:
    k = value_kind(v, kinds)
    t = p.type
    if t == "text":
        return k == "str"
    if t in ("length", "offset", "ratio"):
        return k == "num"
    if t == "bool":
        return k == "bool"
    if t == "point":
        return k == "point"
    if t in REF_TYPES:
        return isinstance(v, Ref) and k in (REF_TYPES[t], "?")
    if t == "modules":
        return k == "list:Module"
    if t == "dims":
        return k == "list:double"
    if t in ENUMS:
        return k == "str" and (not strict or v in ENUMS[t])
    return False


def _greedy(sig: Signature, values, kinds, strict) -> tuple[str, ...] | None:
    params = sig.params
    i = 0
    out = []
    for v in values:
        while True:
            if i >= len(params):
                return None
            p = params[i]
            i += 1
            if accepts(p, v, kinds, strict):
                out.append(p.name)
                break
            if p.required:
                return None
    if any(p.required for p in params[i:]):
        return None
    return tuple(out)


def resolve(callee: str, args, style: str, kinds: dict[str, str]):
    """Pick the signature a call refers to and name each argument."""
    cands = BY_CALLEE.get(callee)
    if not cands:
        return None, tuple(None for _ in args)
    if style == "named":
        names = [a.name for a in args]
        given = set(names)
        for s in cands:
            if given <= set(s.names) and set(s.required) <= given:
                return s, tuple(names)

        def score(s):
            known = set(s.names)
            return len(given & known) - len(set(s.required) - given) - len(given - known)

        best = max(cands, key=score)  # max keeps the first of equals
        return best, tuple(names)
    values = [a.value for a in args]
    for strict in (True, False):
        for s in cands:
            got = _greedy(s, values, kinds, strict)
            if got is not None:
                return s, got
    fits = [s for s in cands if len(values) <= len(s.params)]
    if not fits:
        return max(cands, key=lambda s: len(s.params)), tuple(None for _ in args)

    def pos_score(s):
        ok = sum(accepts(p, v, kinds, False) for p, v in zip(s.params, values))
        return ok - abs(len(s.required) - len(values))

    best = max(fits, key=pos_score)
    return best, tuple(p.name for p in best.params[: len(values)])


# -- parser ---------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def is_punct(self, c, tok=None) -> bool:
        t = tok or self.tok
        return t.kind == "punct" and t.lexeme == c

    def expect_punct(self, c) -> Token:
        if not self.is_punct(c):
            raise SyntaxErr(f"expected {c!r}, found {self.tok.lexeme or self.tok.kind!r}", self.tok.span)
        return self.advance()

    def expect_ident(self) -> Token:
        if self.tok.kind != "identifier":
            raise SyntaxErr(f"expected identifier, found {self.tok.lexeme or self.tok.kind!r}", self.tok.span)
        return self.advance()

    def type_name(self) -> str:
        name = self.expect_ident().lexeme
        if self.is_punct("<"):
            self.advance()
            inner = self.expect_ident().lexeme
            self.expect_punct(">")
            return f"{name}<{inner}>"
        return name

    def number(self) -> float:
        neg = False
        if self.is_punct("-"):
            self.advance()
            neg = True
        t = self.tok
        if t.kind != "number":
            raise SyntaxErr(f"expected number, found {t.lexeme or t.kind!r}", t.span)
        self.advance()
        v = float(t.lexeme)
        if not math.isfinite(v):
            raise SyntaxErr("number out of range", t.span)
        return -v if neg else v

    def value(self):
        t = self.tok
        if t.kind == "text":
            self.advance()
            return t.lexeme
        if t.kind == "number" or self.is_punct("-"):
            return self.number()
        if t.kind == "keyword" and t.lexeme in ("true", "false"):
            self.advance()
            return t.lexeme == "true"
        if t.kind == "identifier":
            self.advance()
            if self.is_punct("["):
                raise SyntaxErr("indexing is only allowed in a split unpacking statement", self.tok.span)
            if self.is_punct(".") or self.is_punct("("):
                raise SyntaxErr("expressions are not allowed as arguments", self.tok.span)
            return Ref(t.lexeme)
        if t.kind == "keyword" and t.lexeme == "new":
            self.advance()
            tname = self.type_name()
            if tname.startswith("List<"):
                elem = tname[5:-1]
                self.expect_punct("{")
                items = []
                if not self.is_punct("}"):
                    while True:
                        if elem == "Module":
                            items.append(Ref(self.expect_ident().lexeme))
                        elif elem == "double":
                            items.append(self.number())
                        else:
                            raise SyntaxErr(f"unsupported list element type {elem!r}", self.tok.span)
                        if self.is_punct(","):
                            self.advance()
                            continue
                        break
                self.expect_punct("}")
                return ListLit(elem, tuple(items))
            if tname in ("Point", "XYZ", "UV"):
                self.expect_punct("(")
                x = self.number()
                self.expect_punct(",")
                y = self.number()
                if self.is_punct(","):
                    self.advance()
                    self.number()
                self.expect_punct(")")
                return PointLit(x, y)
            raise SyntaxErr(f"cannot construct {tname!r} inside an argument", t.span)
        raise SyntaxErr(f"unexpected {t.lexeme or t.kind!r} in argument", t.span)

    def call_args(self) -> tuple[list[Arg], str]:
        self.expect_punct("(")
        args: list[Arg] = []
        if not self.is_punct(")"):
            while True:
                span = self.tok.span
                name = None
                if self.tok.kind == "identifier" and self.is_punct(":", self.peek()):
                    name = self.advance().lexeme
                    self.advance()
                args.append(Arg(name, self.value(), span))
                if self.is_punct(","):
                    self.advance()
                    continue
                break
        self.expect_punct(")")
        named = [a.name is not None for a in args]
        if any(named) and not all(named):
            raise SyntaxErr("named and positional arguments are mixed in one call", args[0].span)
        style = "named" if args and all(named) else "positional"
        return args, style

    def callee(self) -> str:
        t = self.tok
        if t.kind == "keyword" and t.lexeme == "new":
            self.advance()
            return "new " + self.expect_ident().lexeme
        if t.kind == "identifier" and self.is_punct(".", self.peek()):
            owner = self.advance().lexeme
            self.advance()
            return owner + "." + self.expect_ident().lexeme
        raise SyntaxErr(f"expected a call, found {t.lexeme or t.kind!r}", t.span)

    def end_statement(self, last: Token):
        if self.is_punct(";"):
            self.advance()
            return
        if self.tok.kind == "eof" or self.tok.span[0] > last.span[0]:
            return  # newline-terminated
        raise SyntaxErr(f"expected ';', found {self.tok.lexeme or self.tok.kind!r}", self.tok.span)

    def skip_statement(self):
        while self.tok.kind != "eof":
            t = self.advance()
            if t.kind == "punct" and t.lexeme == ";":
                return


def parse_program(source: str, style_hint: str | None = None) -> Program:
    """Parse program text. Syntax problems are collected in ``program.diagnostics``;
    offending statements are skipped, the rest are kept in order."""
    tokens, lex_diags = tokenize(source)
    program = Program(diagnostics=list(lex_diags))
    if lex_diags:
        # keep going on good statements; bad characters become syntax errors below
        tokens = [t for t in tokens if t.kind != "bad"]
    p = _Parser(tokens)
    kinds: dict[str, str] = {}
    splits: dict[str, ActionStatement] = {}
    while p.tok.kind != "eof":
        start = p.tok
        if p.is_punct(";"):
            p.advance()
            continue
        try:
            binding = None
            if (p.tok.kind == "identifier" and not p.is_punct(".", p.peek())) or (
                    p.tok.kind == "identifier" and p.is_punct("<", p.peek())):
                tname = p.type_name()
                var = p.expect_ident().lexeme
                p.expect_punct("=")
                binding = (tname, var)
                if p.tok.kind == "identifier" and p.is_punct("[", p.peek()):
                    lst = p.advance()
                    p.advance()
                    idx_tok = p.tok
                    idx = p.number()
                    p.expect_punct("]")
                    last = p.toks[p.pos - 1]
                    p.end_statement(last)
                    owner = splits.get(lst.lexeme)
                    if owner is None:
                        program.diagnostics.append(Diagnostic(
                            "error", "undefined-name",
                            f"{lst.lexeme!r} is not the result of a split", lst.span))
                        continue
                    if idx not in (0.0, 1.0):
                        program.diagnostics.append(Diagnostic(
                            "error", "arity", f"split results have indices 0 and 1, not {idx:g}", idx_tok.span))
                        continue
                    k = int(idx)
                    if owner.parts[k] is not None:
                        program.diagnostics.append(Diagnostic(
                            "error", "redefinition", f"{lst.lexeme}[{k}] is already unpacked", idx_tok.span))
                        continue
                    parts = list(owner.parts)
                    types = list(owner.part_types)
                    parts[k] = var
                    types[k] = tname
                    owner.parts = tuple(parts)
                    owner.part_types = tuple(types)
                    kinds.setdefault(var, tname)
                    continue
            callee = p.callee()
            args, style = p.call_args()
            last = p.toks[p.pos - 1]
            p.end_statement(last)
        except SyntaxErr as e:
            program.diagnostics.append(Diagnostic("error", "syntax", str(e), e.span))
            if p.tok is start:
                p.advance()
            p.skip_statement()
            continue
        sig, params = resolve(callee, args, style, kinds)
        st = ActionStatement(callee=callee, args=tuple(args), style=style, binding=binding,
                             sig=sig, params=params, span=start.span)
        program.statements.append(st)
        if binding:
            kinds.setdefault(binding[1], binding[0])
            if sig is not None and sig.op_kind == "split":
                splits[binding[1]] = st
    return program


def parse_strict(source: str) -> Program:
    program = parse_program(source)
    if program.diagnostics:
        raise ValueError("; ".join(str(d) for d in program.diagnostics))
    return program
