"""Static checking: everything that can be decided without geometry."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .ast import INITIAL_POINT, ActionStatement, Diagnostic, ListLit, PointLit, Program, Ref
from .parser import accepts
from .signatures import BY_CALLEE, ENUMS, REF_TYPES, Param, Signature, perpendicular

# ops whose alignment must be perpendicular to their direction
_ALIGNED = {"module-relative", "room-relative", "door-for-room", "door-for-module", "hole"}


@dataclass
class Scope:
    """Variables visible at a point of the program."""

    types: dict[str, str] = field(default_factory=dict)
    declared_at: dict[str, int] = field(default_factory=dict)
    retired: dict[str, str] = field(default_factory=dict)

    def kinds(self) -> dict[str, str]:
        return {k: v for k, v in self.types.items() if k not in self.retired}

    def apply(self, st: ActionStatement, index: int):
        for t, v in st.declared():
            if v not in self.types:
                self.types[v] = t
                self.declared_at[v] = index
        if st.sig is None:
            return
        args = st.arguments()
        if st.op_kind == "split":
            m = args.get("module")
            if isinstance(m, Ref):
                self.retired[m.name] = f"split at statement {index + 1}"
        elif st.op_kind == "merge":
            ms = args.get("modules")
            if isinstance(ms, ListLit):
                names = [r.name for r in ms.items if isinstance(r, Ref)]
                gone = names if st.binding else names[1:]
                for n in gone:
                    if n != (st.var or ""):
                        self.retired[n] = f"merged at statement {index + 1}"


def _num_problem(p: Param, v) -> str | None:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        return None
    if not math.isfinite(v):
        return f"{p.name} must be finite"
    if p.type == "length" and v <= 0:
        return f"{p.name} must be positive, got {v:g}"
    if p.type == "offset" and v < 0:
        return f"{p.name} must be non-negative, got {v:g}"
    if p.type == "ratio" and not 0 < v < 1:
        return f"{p.name} must lie strictly between 0 and 1, got {v:g}"
    return None


def check_value(p: Param, v, scope: Scope) -> tuple[str, str] | None:
    """(category, message) for one argument, or None when it is fine."""
    kinds = scope.kinds()
    if isinstance(v, Ref) and v.name != INITIAL_POINT and p.type in REF_TYPES:
        if v.name in scope.retired:
            return "undefined-name", f"{v.name!r} no longer exists ({scope.retired[v.name]})"
        if v.name not in scope.types:
            return "undefined-name", f"{v.name!r} is not defined"
    if p.type in ENUMS:
        if not isinstance(v, str):
            return "type", f"{p.name} expects one of {', '.join(ENUMS[p.type])}"
        if v not in ENUMS[p.type]:
            return "enum-value", f"{v!r} is not a valid {p.name} (expected {', '.join(ENUMS[p.type])})"
        return None
    if not accepts(p, v, kinds, strict=False):
        return "type", f"{p.name} has the wrong type of value"
    prob = _num_problem(p, v)
    if prob:
        return "type", prob
    if p.type == "point" and isinstance(v, PointLit):
        if not (math.isfinite(v.x) and math.isfinite(v.y)):
            return "type", "point coordinates must be finite"
    if p.type == "modules":
        if not v.items:
            return "arity", "module list is empty"
        seen = set()
        for r in v.items:
            if r.name in scope.retired:
                return "undefined-name", f"{r.name!r} no longer exists ({scope.retired[r.name]})"
            if r.name not in scope.types:
                return "undefined-name", f"{r.name!r} is not defined"
            if scope.types[r.name] != "Module":
                return "type", f"{r.name!r} is not a Module"
            if r.name in seen:
                return "type", f"{r.name!r} is listed twice"
            seen.add(r.name)
    if p.type == "dims":
        if not v.items:
            return "arity", "dimension list is empty"
        for d in v.items:
            if not (math.isfinite(d) and d > 0):
                return "type", f"dimensions must be positive, got {d:g}"
    return None


def _arg_span(st: ActionStatement, name: str):
    for a, p in zip(st.args, st.params):
        if p == name:
            return a.span
    return st.span


def _swap_fix(sig: Signature, args: dict, bad: list[str], scope: Scope):
    for i, a in enumerate(bad):
        for b in bad[i + 1:]:
            pa, pb = sig.param(a), sig.param(b)
            if check_value(pa, args[b], scope) is None and check_value(pb, args[a], scope) is None:
                if pa.type in ENUMS and args[b] not in ENUMS[pa.type]:
                    continue
                if pb.type in ENUMS and args[a] not in ENUMS[pb.type]:
                    continue
                return a, b
    return None


def check_statement(st: ActionStatement, index: int, scope: Scope) -> list[Diagnostic]:
    out: list[Diagnostic] = []

    def err(cat, msg, span=None):
        out.append(Diagnostic("error", cat, msg, span or st.span, index))

    if st.sig is None:
        if st.callee not in BY_CALLEE:
            err("unknown-op", f"unknown action {st.callee!r}")
        else:
            err("arity", f"no form of {st.callee} takes these arguments")
        return out
    sig = st.sig
    if st.style == "named":
        seen = set()
        for a in st.args:
            if a.name in seen:
                err("arity", f"argument {a.name!r} given twice", a.span)
            seen.add(a.name)
            if sig.param(a.name) is None:
                err("arity", f"{sig.callee} has no parameter {a.name!r}", a.span)
    else:
        extra = [a for a, p in zip(st.args, st.params) if p is None]
        if extra:
            err("arity", f"{sig.callee} takes at most {len(sig.params)} arguments", extra[0].span)
    args = st.arguments()
    for name in sig.required:
        if name not in args:
            err("arity", f"missing required argument {name!r}")
    problems: dict[str, tuple[str, str]] = {}
    for name, v in args.items():
        p = sig.param(name)
        if p is None:
            continue
        prob = check_value(p, v, scope)
        if prob:
            problems[name] = prob
    typed = [n for n, (cat, _) in problems.items() if cat in ("type", "enum-value")]
    if len(typed) >= 2:
        pair = _swap_fix(sig, args, typed, scope)
        if pair:
            a, b = pair
            del problems[a], problems[b]
            err("wrong-arg-order", f"values of {a!r} and {b!r} appear swapped", _arg_span(st, a))
    for name, (cat, msg) in problems.items():
        err(cat, msg, _arg_span(st, name))
    full = st.full_arguments()
    if sig.op_kind in _ALIGNED and not problems:
        d, al = full.get("direction"), full.get("alignment")
        if isinstance(d, str) and isinstance(al, str) and al != "none" and al not in perpendicular(d):
            err("enum-value", f"alignment {al!r} is not perpendicular to direction {d!r}",
                _arg_span(st, "alignment"))
    if sig.op_kind == "merge" and "modules" not in problems:
        ms = args.get("modules")
        if isinstance(ms, ListLit) and len(ms.items) < 2:
            err("arity", "merging needs at least two modules")
    if sig.op_kind == "unit-directional" and not problems:
        ms, ds = args.get("modules"), args.get("dimensions")
        if isinstance(ms, ListLit) and isinstance(ds, ListLit) and len(ms.items) != len(ds.items):
            err("arity", f"{len(ms.items)} modules but {len(ds.items)} dimensions")
    # bindings
    if st.binding:
        tname, var = st.binding
        if sig.result is None:
            err("type", f"{sig.callee} produces no value to bind")
        elif tname != sig.result:
            err("type", f"{sig.callee} returns {sig.result}, not {tname}")
    for t, v in zip(st.part_types, st.parts):
        if v and t != "Module":
            err("type", f"split pieces are Modules, not {t}")
    for _, v in st.declared():
        if v in scope.types or v == INITIAL_POINT:
            err("redefinition", f"{v!r} is already defined")
    return out


def static_check(program: Program) -> list[Diagnostic]:
    """Compile-time diagnostics; empty iff the program is compile-clean."""
    diags = list(program.diagnostics)
    scope = Scope()
    for i, st in enumerate(program.statements):
        diags.extend(check_statement(st, i, scope))
        scope.apply(st, i)
    return diags


def errors(diags) -> list[Diagnostic]:
    return [d for d in diags if d.severity == "error"]
