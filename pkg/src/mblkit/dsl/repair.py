"""Turn a faulty program into a compile-clean one.

Repair is a single forward pass. Each statement is fixed against the scope
of the already-repaired prefix; whatever still fails is dropped, so the
output is compile-clean by construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .ast import INITIAL_POINT, ActionStatement, Arg, ListLit, Program, Ref
from .check import Scope, check_statement, check_value, errors, static_check
from .parser import accepts
from .signatures import BY_CALLEE, ENUMS, REF_TYPES, SIGNATURES, Signature, perpendicular


class Unrepairable(Exception):
    pass


@dataclass(frozen=True)
class RepairPolicy:
    defaults: dict = field(default_factory=lambda: {
        "offset": 0.0, "alignment": "none", "offset_direction": "none", "open": False,
        "set": "in", "set_dimension": 0.0, "regular": True, "ratio": 0.5,
    })
    drop_unknown_ops: bool = True


def build_statement(sig: Signature, mapping: dict, style: str, like: ActionStatement | None = None,
                    binding=None, parts=(None, None), part_types=("Module", "Module")) -> ActionStatement:
    if like is not None:
        binding, parts, part_types = like.binding, like.parts, like.part_types
    names = [p.name for p in sig.params if p.name in mapping]
    args = tuple(Arg(n if style == "named" else None, mapping[n]) for n in names)
    return ActionStatement(callee=sig.callee, args=args, style=style, binding=binding, parts=parts,
                           part_types=part_types, sig=sig, params=tuple(names),
                           span=like.span if like else (0, 0))


def _rename_refs(v, aliases: dict[str, str]):
    if isinstance(v, Ref) and v.name in aliases:
        return Ref(aliases[v.name])
    if isinstance(v, ListLit) and v.elem_type == "Module":
        return ListLit("Module", tuple(_rename_refs(r, aliases) for r in v.items))
    return v


def _retarget(st: ActionStatement, mapping: dict, scope: Scope) -> tuple[Signature, dict] | None:
    """Find a different action whose parameters fit the given arguments."""
    kinds = scope.kinds()
    same_callee = [s for s in BY_CALLEE.get(st.callee, []) if s is not st.sig]
    family = [s for s in SIGNATURES if st.sig and s.op_kind == st.sig.op_kind and s not in same_callee]
    others = [s for s in SIGNATURES if s not in same_callee and s not in family]
    for cand in same_callee + family + others:
        if cand is st.sig:
            continue
        new = {}
        used = set()
        ok = True
        for name, v in mapping.items():
            p = cand.param(name)
            if p is not None and accepts(p, v, kinds, strict=False) and name not in used:
                new[name] = v
                used.add(name)
                continue
            if isinstance(v, Ref):
                kind = kinds.get(v.name)
                target = [q for q in cand.params if q.type in REF_TYPES and REF_TYPES[q.type] == kind
                          and q.name not in used and q.name not in mapping]
                if len(target) == 1:
                    new[target[0].name] = v
                    used.add(target[0].name)
                    continue
            ok = False
            break
        if not ok or not set(cand.required) <= set(new):
            continue
        if any(check_value(cand.param(n), v, scope) for n, v in new.items()):
            continue
        return cand, new
    return None


def _nearest(scope: Scope, kind: str, exclude=()) -> str | None:
    alive = [(i, v) for v, i in scope.declared_at.items()
             if scope.types.get(v) == kind and v not in scope.retired and v not in exclude]
    return max(alive)[1] if alive else None


def _fix_statement(st: ActionStatement, scope: Scope, policy: RepairPolicy, log: list[str],
                   where: str) -> ActionStatement | None:
    sig = st.sig
    if sig is None:
        if st.callee not in BY_CALLEE:
            log.append(f"{where}: dropped call to unknown action {st.callee}")
            return None
        cands = BY_CALLEE[st.callee]
        if st.style == "positional" and len(st.args) < min(len(c.required) for c in cands):
            raise Unrepairable(f"{where}: {st.callee} is missing required positional arguments")
        log.append(f"{where}: dropped {st.callee} call matching no known form")
        return None

    mapping = {}
    for a, p in zip(st.args, st.params):
        if p is None:
            log.append(f"{where}: dropped surplus positional argument")
            continue
        if p in mapping:
            log.append(f"{where}: dropped duplicate argument {p!r}")
            continue
        mapping[p] = a.value

    # wrong function for these arguments
    unknown = [n for n in mapping if sig.param(n) is None]
    bad_refs = [n for n, v in mapping.items() if sig.param(n) is not None and sig.param(n).type in REF_TYPES
                and isinstance(v, Ref) and scope.kinds().get(v.name) not in (None, REF_TYPES[sig.param(n).type])]
    if unknown or bad_refs:
        found = _retarget(st, mapping, scope)
        if found:
            new_sig, mapping = found
            log.append(f"{where}: replaced {sig.callee} ({sig.key}) with {new_sig.callee} ({new_sig.key})")
            sig = new_sig
        else:
            for n in unknown:
                log.append(f"{where}: dropped unknown argument {n!r}")
                del mapping[n]

    # swapped values
    probs = {n: check_value(sig.param(n), v, scope) for n, v in mapping.items()}
    typed = [n for n, pr in probs.items() if pr and pr[0] in ("type", "enum-value")]
    done = set()
    for i, a in enumerate(typed):
        for b in typed[i + 1:]:
            if a in done or b in done:
                continue
            pa, pb = sig.param(a), sig.param(b)
            va, vb = mapping[a], mapping[b]
            if check_value(pa, vb, scope) is None and check_value(pb, va, scope) is None:
                mapping[a], mapping[b] = vb, va
                done.update((a, b))
                log.append(f"{where}: swapped values of {a!r} and {b!r}")

    # invalid values: fall back to defaults, or re-point dangling references
    for name in list(mapping):
        p = sig.param(name)
        v = _rename_refs(mapping[name], {})
        prob = check_value(p, v, scope)
        if prob is None:
            continue
        cat = prob[0]
        if cat == "undefined-name":
            if p.type in REF_TYPES:
                alt = _nearest(scope, REF_TYPES[p.type])
                if alt:
                    mapping[name] = Ref(alt)
                    log.append(f"{where}: re-pointed {v.name!r} to {alt!r}")
                    continue
            elif p.type == "modules":
                items = []
                for r in v.items:
                    if r.name in scope.types and r.name not in scope.retired and r not in items:
                        items.append(r)
                        continue
                    alt = _nearest(scope, "Module", exclude={i.name for i in items} | {i.name for i in v.items})
                    if alt:
                        items.append(Ref(alt))
                        log.append(f"{where}: re-pointed {r.name!r} to {alt!r}")
                    else:
                        log.append(f"{where}: removed {r.name!r} from module list")
                mapping[name] = ListLit("Module", tuple(items))
                if check_value(p, mapping[name], scope) is None:
                    continue
        default = policy.defaults.get(name, p.default if p.has_default else None)
        if default is not None and check_value(p, default, scope) is None:
            mapping[name] = default
            log.append(f"{where}: reset {name!r} to default {default!r}")
        elif not p.required:
            del mapping[name]
            log.append(f"{where}: dropped invalid optional argument {name!r}")

    # cross-argument rules
    if sig.op_kind in ("module-relative", "room-relative", "door-for-room", "door-for-module", "hole"):
        d, al = mapping.get("direction"), mapping.get("alignment")
        if isinstance(d, str) and isinstance(al, str) and al != "none" and al not in perpendicular(d):
            mapping["alignment"] = "none"
            log.append(f"{where}: reset non-perpendicular alignment to 'none'")
    if sig.op_kind == "unit-directional":
        ms, ds = mapping.get("modules"), mapping.get("dimensions")
        if isinstance(ms, ListLit) and isinstance(ds, ListLit) and ds.items and len(ms.items) != len(ds.items):
            items = list(ds.items[: len(ms.items)])
            items += [items[-1]] * (len(ms.items) - len(items))
            mapping["dimensions"] = ListLit("double", tuple(items))
            log.append(f"{where}: matched dimension count to module count")

    # missing required arguments
    for p in sig.params:
        if p.required and p.name not in mapping:
            if p.name in policy.defaults:
                mapping[p.name] = policy.defaults[p.name]
                log.append(f"{where}: filled missing {p.name!r} with default")
            elif st.style == "positional":
                raise Unrepairable(f"{where}: missing required positional argument {p.name!r}")
            else:
                log.append(f"{where}: dropped statement missing required argument {p.name!r}")
                return None
    # optional arguments are spelled out with policy defaults
    for p in sig.params:
        if not p.required and p.name not in mapping and p.name in policy.defaults:
            mapping[p.name] = policy.defaults[p.name]

    binding = st.binding
    if binding is not None and sig.result is None:
        log.append(f"{where}: removed binding {binding[1]!r}; {sig.callee} returns nothing")
        binding = None
    elif binding is not None and binding[0] != sig.result:
        log.append(f"{where}: declared type of {binding[1]!r} changed to {sig.result}")
        binding = (sig.result, binding[1])
    parts = st.parts if sig.op_kind == "split" else (None, None)
    fixed = build_statement(sig, mapping, st.style, binding=binding, parts=parts)
    fixed.span = st.span
    return fixed


def repair_program(program: Program, defaults: RepairPolicy | None = None) -> Program:
    """Return a compile-clean version of ``program``; the log lists every change."""
    policy = defaults or RepairPolicy()
    log: list[str] = []
    before = len(errors(static_check(program)))
    for d in program.diagnostics:
        log.append(f"line {d.span[0]}: dropped unparseable text ({d.message})")
    scope = Scope()
    aliases: dict[str, str] = {}
    out: list[ActionStatement] = []
    for i, st in enumerate(program.statements):
        where = f"statement {i + 1}"
        if aliases:
            st = replace(st, args=tuple(replace(a, value=_rename_refs(a.value, aliases)) for a in st.args))
        fixed = _fix_statement(st, scope, policy, log, where)
        if fixed is None:
            continue
        # fresh names for redefinitions; later uses follow the newest binding
        renames = {}
        for _, v in fixed.declared():
            if v in scope.types or v == INITIAL_POINT:
                k = 2
                while f"{v}_{k}" in scope.types:
                    k += 1
                renames[v] = f"{v}_{k}"
        if renames:
            b = fixed.binding
            if b and b[1] in renames:
                fixed.binding = (b[0], renames[b[1]])
            fixed.parts = tuple(renames.get(p, p) if p else p for p in fixed.parts)
            for old, new in renames.items():
                log.append(f"{where}: renamed redefined {old!r} to {new!r}")
            aliases.update(renames)
        diags = errors(check_statement(fixed, len(out), scope))
        if diags:
            log.append(f"{where}: dropped ({diags[0].category}: {diags[0].message})")
            continue
        scope.apply(fixed, len(out))
        out.append(fixed)
    result = Program(statements=out, repair_log=log)
    after = len(errors(static_check(result)))
    log.append(f"error count {before} -> {after}")
    return result
