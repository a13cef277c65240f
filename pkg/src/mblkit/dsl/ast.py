from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .signatures import Signature

Span = tuple[int, int]

# the one reserved identifier: the document origin
INITIAL_POINT = "initial_point"


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class PointLit:
    x: float
    y: float


@dataclass(frozen=True)
class ListLit:
    elem_type: str  # "Module" or "double"
    items: tuple


Value = Union[float, str, bool, Ref, PointLit, ListLit]


@dataclass(frozen=True)
class Arg:
    name: str | None
    value: Value
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # error | warning
    category: str  # syntax | unknown-op | arity | type | enum-value | undefined-name | redefinition | wrong-arg-order
    message: str
    span: Span = (0, 0)
    statement: int | None = None

    def __str__(self):
        line, col = self.span
        return f"{line}:{col}: {self.severity}[{self.category}] {self.message}"


def value_key(v: Value):
    """Hashable, normalised form used for structural comparison."""
    if isinstance(v, bool):
        return ("bool", v)
    if isinstance(v, (int, float)):
        return ("num", round(float(v), 9) + 0.0)
    if isinstance(v, str):
        return ("str", v)
    if isinstance(v, Ref):
        return ("ref", v.name)
    if isinstance(v, PointLit):
        return ("point", round(v.x, 9) + 0.0, round(v.y, 9) + 0.0)
    if isinstance(v, ListLit):
        return ("list", v.elem_type, tuple(value_key(i) for i in v.items))
    raise TypeError(f"unsupported value {v!r}")


@dataclass(eq=False)
class ActionStatement:
    callee: str
    args: tuple[Arg, ...]
    style: str  # named | positional
    binding: tuple[str, str] | None = None  # (declared type, variable)
    parts: tuple[str | None, str | None] = (None, None)  # split piece variables
    part_types: tuple[str, str] = ("Module", "Module")
    sig: Signature | None = None
    params: tuple[str | None, ...] = ()
    span: Span = (0, 0)

    @property
    def op_kind(self) -> str | None:
        return self.sig.op_kind if self.sig else None

    @property
    def var(self) -> str | None:
        return self.binding[1] if self.binding else None

    def arguments(self) -> dict[str, Value]:
        """Resolved parameter name -> value (only the provided arguments)."""
        out = {}
        for a, p in zip(self.args, self.params):
            if p is not None and p not in out:
                out[p] = a.value
        return out

    def full_arguments(self) -> dict[str, Value]:
        """Provided arguments plus signature defaults, in signature order."""
        given = self.arguments()
        if self.sig is None:
            return given
        out = {}
        for p in self.sig.params:
            if p.name in given:
                out[p.name] = given[p.name]
            elif p.has_default:
                out[p.name] = p.default
        return out

    def declared(self) -> list[tuple[str, str]]:
        """(type, variable) pairs this statement introduces."""
        out = []
        if self.binding:
            out.append(self.binding)
        for t, v in zip(self.part_types, self.parts):
            if v:
                out.append((t, v))
        return out

    def key(self):
        if self.sig is not None:
            args = tuple(sorted((k, value_key(v)) for k, v in self.full_arguments().items()))
            head = self.sig.key
        else:
            args = tuple((a.name, value_key(a.value)) for a in self.args)
            head = self.callee
        return (head, self.binding, self.parts, args)

    def __eq__(self, other):
        if not isinstance(other, ActionStatement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(eq=False)
class Program:
    statements: list[ActionStatement] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)  # syntax problems met while parsing
    repair_log: list[str] = field(default_factory=list)

    @property
    def symbols(self) -> dict[str, int]:
        table: dict[str, int] = {}
        for i, st in enumerate(self.statements):
            for _, v in st.declared():
                table.setdefault(v, i)
        return table

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return [s.key() for s in self.statements] == [s.key() for s in other.statements]
