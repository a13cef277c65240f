"""Pretty printing in either argument style, and the canonical form."""
from __future__ import annotations

from .ast import ActionStatement, ListLit, PointLit, Program, Ref


def fmt_num(v: float) -> str:
    v = float(v)
    if v.is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, float)):
        return fmt_num(v)
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, Ref):
        return v.name
    if isinstance(v, PointLit):
        return f"new Point({fmt_num(v.x)}, {fmt_num(v.y)})"
    if isinstance(v, ListLit):
        inner = ", ".join(fmt_value(i) for i in v.items)
        return f"new List<{v.elem_type}> {{ {inner} }}" if inner else f"new List<{v.elem_type}> {{ }}"
    raise TypeError(f"cannot print {v!r}")


def ordered_args(st: ActionStatement) -> list[tuple[str, object]]:
    """Arguments in signature order.

    Defaults are filled in for optional parameters that sit before the last
    provided one, so the positional rendering stays unambiguous.
    """
    given = st.arguments()
    params = st.sig.params
    last = max((i for i, p in enumerate(params) if p.name in given), default=-1)
    out = []
    for i, p in enumerate(params[: last + 1]):
        if p.name in given:
            out.append((p.name, given[p.name]))
        elif p.has_default:
            out.append((p.name, p.default))
    return out


def format_statement(st: ActionStatement, style: str = "named") -> str:
    if st.sig is None:
        parts = [(f"{a.name}: " if a.name else "") + fmt_value(a.value) for a in st.args]
    elif style == "named":
        parts = [f"{k}: {fmt_value(v)}" for k, v in ordered_args(st)]
    else:
        parts = [fmt_value(v) for _, v in ordered_args(st)]
    line = f"{st.callee}({', '.join(parts)});"
    if st.binding:
        line = f"{st.binding[0]} {st.binding[1]} = {line}"
    lines = [line]
    if st.binding:
        for k, (t, v) in enumerate(zip(st.part_types, st.parts)):
            if v:
                lines.append(f"{t} {v} = {st.binding[1]}[{k}];")
    return "\n".join(lines)


def to_source(program: Program, style: str = "named") -> str:
    if not program.statements:
        return ""
    return "\n".join(format_statement(s, style) for s in program.statements) + "\n"


def canonicalize(program: Program) -> str:
    """Named-argument text with fixed parameter order, one statement per line."""
    return to_source(program, "named")
