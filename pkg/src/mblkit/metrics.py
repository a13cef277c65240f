"""Scoring predicted programs against gold programs.

Text-level scores (instance and argument F1) compare normalised design
actions; layout-level scores (pass, IoU) execute both programs and compare
the resulting geometry.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import geom
from .dsl import Program, parse_program, static_check
from .dsl.ast import INITIAL_POINT, ListLit, PointLit, Ref
from .dsl.check import errors
from .dsl.signatures import category_of
from .geom import Rect
from .kernel import Config, ExecError, LayoutDocument, execute

CATEGORIES = ("module", "unit", "room")
PASS_EPS = 1.0


class MissingPrediction(KeyError):
    """A gold record has no prediction."""


@dataclass(frozen=True)
class CanonicalInstance:
    op_kind: str
    args: tuple[tuple[str, object], ...]

    def arg_dict(self) -> dict:
        return dict(self.args)

    @property
    def category(self) -> str:
        return self.op_kind.split(":")[0] if self.op_kind.startswith("unknown") else category_of(self.op_kind)


def _as_program(p) -> Program:
    return p if isinstance(p, Program) else parse_program(p or "")


def _norm(v, ids: dict[str, str]):
    if isinstance(v, bool):
        return v
    if isinstance(v, (int, float)):
        return round(float(v), 9) + 0.0
    if isinstance(v, str):
        return v
    if isinstance(v, Ref):
        if v.name == INITIAL_POINT:
            return ("point", 0.0, 0.0)
        return ids.get(v.name, "?" + v.name)
    if isinstance(v, PointLit):
        return ("point", round(v.x, 9) + 0.0, round(v.y, 9) + 0.0)
    if isinstance(v, ListLit):
        return tuple(_norm(i, ids) for i in v.items)
    return repr(v)


def canonical_instances(program) -> list[CanonicalInstance]:
    """Normalised design actions of a program.

    Variables are replaced by ids built from the entity kind and its name
    argument, so the choice of variable names never matters.
    """
    program = _as_program(program)
    ids: dict[str, str] = {}
    seen: Counter = Counter()

    def fresh(base: str) -> str:
        seen[base] += 1
        return base if seen[base] == 1 else f"{base}~{seen[base]}"

    out = []
    for st in program.statements:
        if st.sig is None:
            args = tuple((a.name or f"#{k}", _norm(a.value, ids)) for k, a in enumerate(st.args))
            out.append(CanonicalInstance(f"unknown:{st.callee}", args))
            continue
        given = st.full_arguments()
        args = {}
        for k, v in given.items():
            p = st.sig.param(k)
            nv = _norm(v, ids)
            if p is not None and p.type in ("direction", "corner", "alignment", "offset_direction",
                                             "split_direction", "set_mode") and isinstance(nv, str):
                nv = nv.lower()
            args[k] = nv
        out.append(CanonicalInstance(st.op_kind, tuple(sorted(args.items(), key=lambda kv: kv[0]))))
        cat = category_of(st.op_kind)
        if st.op_kind == "split":
            src = args.get("module")
            for n, var in enumerate(st.parts):
                if var:
                    ids[var] = f"{src}#{n}"
            if st.binding:
                ids[st.binding[1]] = f"{src}#*"
        elif st.op_kind == "merge":
            members = args.get("modules", ())
            if st.binding:
                ids[st.binding[1]] = fresh(f"merge{members}")
        elif st.binding and cat in CATEGORIES:
            ids[st.binding[1]] = fresh(f"{cat}:{given.get('name')}")
    return out


def _prf(matched: float, n_pred: int, n_gold: int) -> tuple[float, float, float]:
    if n_pred == 0 and n_gold == 0:
        return 1.0, 1.0, 1.0
    p = matched / n_pred if n_pred else 0.0
    r = matched / n_gold if n_gold else 0.0
    f = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return p, r, f


def instance_f1(pred, gold) -> tuple[float, float, float]:
    """(precision, recall, F1) over whole design actions."""
    pi = pred if isinstance(pred, list) else canonical_instances(pred)
    gi = gold if isinstance(gold, list) else canonical_instances(gold)
    matched = sum((Counter(pi) & Counter(gi)).values())
    return _prf(matched, len(pi), len(gi))


def align_instances(pi: list[CanonicalInstance], gi: list[CanonicalInstance]) -> list[tuple[int, int, int]]:
    """Pairs (pred index, gold index, shared argument count) within each action kind."""
    pairs = []
    for kind in sorted({i.op_kind for i in pi} & {g.op_kind for g in gi}):
        ps = [k for k, i in enumerate(pi) if i.op_kind == kind]
        gs = [k for k, g in enumerate(gi) if g.op_kind == kind]
        shared = np.array([[len(set(pi[a].args) & set(gi[b].args)) for b in gs] for a in ps], dtype=float)
        # order distance only breaks ties: its total over any assignment stays below one shared argument
        rank = np.abs(np.arange(len(ps))[:, None] - np.arange(len(gs))[None, :]) / (len(ps) + len(gs) + 1) ** 2
        rows, cols = linear_sum_assignment(-(shared - rank))
        pairs += [(ps[r], gs[c], int(shared[r, c])) for r, c in zip(rows, cols)]
    return sorted(pairs)


def argument_f1(pred, gold) -> tuple[float, float, float]:
    """(precision, recall, F1) over (instance, argument, value) triples."""
    pi = pred if isinstance(pred, list) else canonical_instances(pred)
    gi = gold if isinstance(gold, list) else canonical_instances(gold)
    matched = sum(s for _, _, s in align_instances(pi, gi))
    return _prf(matched, sum(len(i.args) for i in pi), sum(len(g.args) for g in gi))


# -- layout comparison --------------------------------------------------------

Boxes = dict  # category -> list of (label, Rect)


def boxes_of(doc: LayoutDocument) -> Boxes:
    """Labelled rectangles per category, as compared by IoU and pass."""
    return {
        "module": [("module", m.rect) for m in doc.modules.values()],
        "unit": [("unit", u.rect) for u in doc.units.values()],
        "room": [(r.label, r.rect) for r in doc.rooms.values()],
    }


def _boxes(x) -> Boxes:
    if x is None:
        return {c: [] for c in CATEGORIES}
    return boxes_of(x) if isinstance(x, LayoutDocument) else x


def category_iou(pred: list[tuple[str, Rect]], gold: list[tuple[str, Rect]]) -> float | None:
    """Matched IoU sum divided by the larger count; None when both are empty."""
    n = max(len(pred), len(gold))
    if n == 0:
        return None
    total = 0.0
    for label in sorted({l for l, _ in gold} & {l for l, _ in pred}):
        ps = [r for l, r in pred if l == label]
        gs = [r for l, r in gold if l == label]
        m = np.array([[geom.rect_iou(a, b) for b in gs] for a in ps])
        rows, cols = linear_sum_assignment(-m)
        total += float(m[rows, cols].sum())
    return total / n


@dataclass(frozen=True)
class IoU:
    overall: float
    module: float | None
    unit: float | None
    room: float | None


def layout_iou(pred, gold) -> IoU:
    """Per-category IoU; a failed prediction (``None``) scores zero."""
    g = _boxes(gold)
    if pred is None:
        per = {c: (0.0 if g[c] else None) for c in CATEGORIES}
    else:
        p = _boxes(pred)
        per = {c: category_iou(p[c], g[c]) for c in CATEGORIES}
    present = [per[c] for c in CATEGORIES if g[c]]
    if present:
        overall = sum(present) / len(present)
    else:
        overall = 1.0 if pred is not None and not any(_boxes(pred)[c] for c in CATEGORIES) else 0.0
    return IoU(overall, per["module"], per["unit"], per["room"])


def _rect_close(a: Rect, b: Rect, eps: float) -> bool:
    return all(abs(u - v) <= eps for u, v in zip((a.x, a.y, a.length, a.width), (b.x, b.y, b.length, b.width)))


def _feasible_match(ps: list, gs: list, close) -> bool:
    if len(ps) != len(gs):
        return False
    if not ps:
        return True
    cost = np.array([[0.0 if close(a, b) else 1.0 for b in gs] for a in ps])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].sum()) == 0.0


def _openings(doc: LayoutDocument):
    out = []
    for kind, coll in (("door", doc.doors), ("hole", doc.holes)):
        for o in coll.values():
            axis, c, lo, hi = doc.opening_geometry(o)
            out.append((kind, axis, o.side, (c, lo, hi)))
    return out


def layouts_match(pred: LayoutDocument, gold: LayoutDocument, eps: float = PASS_EPS) -> bool:
    pb, gb = boxes_of(pred), boxes_of(gold)
    for c in CATEGORIES:
        if Counter(l for l, _ in pb[c]) != Counter(l for l, _ in gb[c]):
            return False
        for label in {l for l, _ in gb[c]}:
            ps = [r for l, r in pb[c] if l == label]
            gs = [r for l, r in gb[c] if l == label]
            if not _feasible_match(ps, gs, lambda a, b: _rect_close(a, b, eps)):
                return False
    po, go = _openings(pred), _openings(gold)
    for key in {o[:3] for o in po} | {o[:3] for o in go}:
        ps = [o[3] for o in po if o[:3] == key]
        gs = [o[3] for o in go if o[:3] == key]
        if not _feasible_match(ps, gs, lambda a, b: all(abs(u - v) <= eps for u, v in zip(a, b))):
            return False
    return True


def check_compile(pred_source: str):
    """(compiles, diagnostics) for a predicted program text."""
    program = parse_program(pred_source or "")
    diags = static_check(program)
    return not errors(diags), diags


def try_execute(program: Program, config: Config | None = None) -> tuple[LayoutDocument | None, ExecError | None]:
    try:
        return execute(program, config, check=False), None
    except ExecError as e:
        return None, e


def check_pass(pred_source, gold_source, eps: float = PASS_EPS, config: Config | None = None) -> bool:
    pred, gold = _as_program(pred_source), _as_program(gold_source)
    if errors(static_check(pred)):
        return False
    pdoc, _ = try_execute(pred, config)
    gdoc, _ = try_execute(gold, config)
    return pdoc is not None and gdoc is not None and layouts_match(pdoc, gdoc, eps)


# -- reports ------------------------------------------------------------------

@dataclass
class EvalReport:
    id: str = ""
    compiled: bool = False
    passed: bool = False
    instance_precision: float = 0.0
    instance_recall: float = 0.0
    instance_f1: float = 0.0
    argument_precision: float = 0.0
    argument_recall: float = 0.0
    argument_f1: float = 0.0
    iou_overall: float = 0.0
    iou_module: float | None = None
    iou_unit: float | None = None
    iou_room: float | None = None
    components: dict = field(default_factory=dict)  # category -> instance F1
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


COMPONENTS = ("module", "unit", "room", "element")


def evaluate(pred_source, gold_source, gold_doc: LayoutDocument | None = None, config: Config | None = None,
             record_id: str = "") -> EvalReport:
    """Every score for one prediction."""
    rep = EvalReport(id=record_id)
    pred, gold = _as_program(pred_source), _as_program(gold_source)
    pi, gi = canonical_instances(pred), canonical_instances(gold)
    rep.instance_precision, rep.instance_recall, rep.instance_f1 = instance_f1(pi, gi)
    rep.argument_precision, rep.argument_recall, rep.argument_f1 = argument_f1(pi, gi)
    for comp in COMPONENTS:
        ps = [i for i in pi if i.category == comp]
        gs = [g for g in gi if g.category == comp]
        if gs or ps:
            rep.components[comp] = instance_f1(ps, gs)[2]
    rep.compiled = not errors(static_check(pred))
    if gold_doc is None:
        gold_doc, gerr = try_execute(gold, config)
        if gerr is not None:
            rep.error = f"gold failed: {gerr}"
    pdoc = None
    if rep.compiled:
        pdoc, perr = try_execute(pred, config)
        if perr is not None:
            rep.error = rep.error or str(perr)
    iou = layout_iou(pdoc, gold_doc)
    rep.iou_overall, rep.iou_module, rep.iou_unit, rep.iou_room = iou.overall, iou.module, iou.unit, iou.room
    rep.passed = pdoc is not None and gold_doc is not None and layouts_match(pdoc, gold_doc)
    return rep


def evaluate_coordinates(pred_text: str, gold_doc: LayoutDocument, record_id: str = "") -> EvalReport:
    """IoU-only scoring of a coordinate-sequence prediction."""
    from .synth.coords import FormatError, boxes_from_text

    rep = EvalReport(id=record_id)
    try:
        boxes = boxes_from_text(pred_text)
    except FormatError as e:
        rep.error = str(e)
        boxes = None
    rep.compiled = boxes is not None
    iou = layout_iou(boxes, gold_doc)
    rep.iou_overall, rep.iou_module, rep.iou_unit, rep.iou_room = iou.overall, iou.module, iou.unit, iou.room
    return rep


SCORE_FIELDS = ("compiled", "passed", "instance_f1", "argument_f1", "iou_overall", "iou_module", "iou_unit",
                "iou_room")


def mean_scores(reports: Iterable[EvalReport]) -> dict[str, float | None]:
    reports = list(reports)
    out: dict[str, float | None] = {"n": len(reports)}
    for f in SCORE_FIELDS:
        vals = [float(getattr(r, f)) for r in reports if getattr(r, f) is not None]
        out[f] = sum(vals) / len(vals) if vals else None
    for comp in COMPONENTS:
        vals = [r.components[comp] for r in reports if comp in r.components]
        out[f"f1_{comp}"] = sum(vals) / len(vals) if vals else None
    return out


def component_counts(program) -> dict[str, int]:
    counts = Counter(i.category for i in canonical_instances(program))
    return {c: counts.get(c, 0) for c in COMPONENTS}


def default_groups(counts: Mapping[str, int]) -> dict[str, str]:
    """Cohort names of a gold program, split on component counts."""
    return {
        "modules": "<=2" if counts["module"] <= 2 else ">2",
        "units": "1" if counts["unit"] <= 1 else ">1",
        "rooms": "<=4" if counts["room"] <= 4 else ">4",
    }


@dataclass
class BatchResult:
    reports: list[EvalReport]
    means: dict
    groups: dict  # "modules:<=2" -> means
    missing: list[MissingPrediction]


def _evaluate_job(job):
    pred, gold, rid, config = job
    return evaluate(pred, gold, config=config, record_id=rid)


def batch_evaluate(dataset: Iterable[Mapping], predictions: Mapping[str, str], config: Config | None = None,
                   code_key: str = "code", workers: int = 1) -> BatchResult:
    """Evaluate predictions aligned by record id.

    ``dataset`` rows need ``id`` and the gold program under ``code_key``.
    Absent predictions count as failed compiles.
    """
    rows = [(str(row["id"]), row[code_key]) for row in dataset]
    jobs = [(predictions[rid], gold, rid, config) for rid, gold in rows if rid in predictions]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            done = list(pool.map(_evaluate_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        done = [_evaluate_job(j) for j in jobs]
    by_id = {r.id: r for r in done}
    reports, missing = [], []
    cohorts: dict[str, list[EvalReport]] = {}
    for rid, gold_src in rows:
        gold = parse_program(gold_src)
        if rid in by_id:
            rep = by_id[rid]
        else:
            missing.append(MissingPrediction(rid))
            rep = EvalReport(id=rid, error="missing prediction")
            gdoc, _ = try_execute(gold, config)
            iou = layout_iou(None, gdoc)
            rep.iou_module, rep.iou_unit, rep.iou_room = iou.module, iou.unit, iou.room
        reports.append(rep)
        for axis, name in default_groups(component_counts(gold)).items():
            cohorts.setdefault(f"{axis}:{name}", []).append(rep)
    return BatchResult(reports, mean_scores(reports), {k: mean_scores(v) for k, v in sorted(cohorts.items())},
                       missing)


def format_table(means: Mapping[str, float | None]) -> str:
    """Markdown table of percentage scores."""
    cols = [k for k in means if k != "n"]
    head = "| n | " + " | ".join(cols) + " |"
    sep = "|---" * (len(cols) + 1) + "|"
    cells = ["-" if means[c] is None or (isinstance(means[c], float) and math.isnan(means[c]))
             else f"{100 * means[c]:.1f}" for c in cols]
    return "\n".join([head, sep, f"| {means.get('n', '')} | " + " | ".join(cells) + " |"])
