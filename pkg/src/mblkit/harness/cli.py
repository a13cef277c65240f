"""Command line entry point: ``mbl run|eval|synth|render|gen``.

Exit codes: 0 success, 1 compile (static) failure, 2 runtime failure.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from pathlib import Path

from ..dsl import Unrepairable, parse_program, repair_program, static_check
from ..dsl.check import errors
from ..kernel import Config, ExecError, execute
from .io import atomic_write_text

OK, COMPILE_ERROR, RUNTIME_ERROR = 0, 1, 2


def _err(*parts):
    print(*parts, file=sys.stderr)


def _read(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(path, text: str):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


# -- run ----------------------------------------------------------------------

def cmd_run(args) -> int:
    from .layout_json import export_layout
    from .svg import render_svg

    program = parse_program(_read(args.program))
    diags = errors(static_check(program))
    if diags:
        for d in diags:
            _err(f"{args.program}:{d}")
        if not args.repair:
            return COMPILE_ERROR
        try:
            program = repair_program(program)
        except Unrepairable as e:
            _err(f"repair failed: {e}")
            return COMPILE_ERROR
        for line in program.repair_log:
            _err(f"repair: {line}")
    try:
        doc = execute(program, Config(wall_thickness=args.wall_thickness))
    except ExecError as e:
        _err(f"{args.program}: {e}")
        return RUNTIME_ERROR
    _emit(args.out, export_layout(doc, topology=args.topology))
    if args.svg:
        atomic_write_text(args.svg, render_svg(doc))
    return OK


# -- eval ---------------------------------------------------------------------

GOLD_KEYS = ("code_named", "code", "gold")
PRED_KEYS = ("prediction", "code", "code_named", "output")


def load_items(path, keys) -> dict[str, str]:
    """id -> text from a JSONL file, a directory of files, or a single file."""
    p = Path(path)
    if p.is_dir():
        return {f.stem: f.read_text(encoding="utf-8") for f in sorted(p.iterdir()) if f.is_file()}
    if p.suffix == ".jsonl":
        out = {}
        with open(p, encoding="utf-8") as fh:
            for n, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                row = json.loads(line)
                key = next((k for k in keys if k in row), None)
                if key is None or "id" not in row:
                    raise ValueError(f"{p}:{n}: row needs 'id' and one of {', '.join(keys)}")
                out[str(row["id"])] = row[key]
        return out
    return {p.stem: p.read_text(encoding="utf-8")}


def _table(rows: list[tuple[str, dict]], cols, na=()) -> tuple[str, str]:
    def cell(means, c):
        if c in na:
            return "n/a"
        v = means.get(c)
        return "-" if v is None else f"{100 * v:.1f}"

    md = ["| cohort | n | " + " | ".join(cols) + " |", "|---" * (len(cols) + 2) + "|"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["cohort", "n"] + list(cols))
    for name, means in rows:
        cells = [cell(means, c) for c in cols]
        md.append(f"| {name} | {means['n']} | " + " | ".join(cells) + " |")
        w.writerow([name, means["n"]] + cells)
    return "\n".join(md) + "\n", buf.getvalue()


def cmd_eval(args) -> int:
    from .. import metrics
    from ..synth.coords import FormatError  # noqa: F401  (coordinate parser)

    golds = load_items(args.gold, GOLD_KEYS)
    preds = load_items(args.pred, ("coordinate_seq",) + PRED_KEYS if args.coordinate else PRED_KEYS)
    cols = ["compiled", "passed", "instance_f1", "argument_f1", "iou_overall", "iou_module", "iou_unit", "iou_room"]
    na = ()
    if args.coordinate:
        reports = []
        missing = []
        for rid, gold in golds.items():
            gdoc, _ = metrics.try_execute(parse_program(gold))
            if rid not in preds:
                missing.append(rid)
                rep = metrics.EvalReport(id=rid, error="missing prediction")
            else:
                rep = metrics.evaluate_coordinates(preds[rid], gdoc, rid)
            reports.append(rep)
        means = metrics.mean_scores(reports)
        groups = {}
        for rep, (rid, gold) in zip(reports, golds.items()):
            for axis, name in metrics.default_groups(metrics.component_counts(gold)).items():
                groups.setdefault(f"{axis}:{name}", []).append(rep)
        groups = {k: metrics.mean_scores(v) for k, v in sorted(groups.items())}
        na = ("passed", "instance_f1", "argument_f1")
    else:
        res = metrics.batch_evaluate([{"id": k, "code": v} for k, v in golds.items()], preds, workers=args.workers)
        reports, means, groups, missing = res.reports, res.means, res.groups, [str(m.args[0]) for m in res.missing]
    for rid in missing:
        _err(f"missing prediction for {rid}")
    rows = [("all", means)]
    if args.group_by:
        rows += [(k, v) for k, v in groups.items() if k.startswith(args.group_by + ":")]
    md, csv_text = _table(rows, cols, na)
    sys.stdout.write(md)
    if args.out:
        out = Path(args.out)
        atomic_write_text(out / "records.jsonl", "".join(json.dumps(r.to_dict()) + "\n" for r in reports))
        atomic_write_text(out / "summary.md", md)
        atomic_write_text(out / "summary.csv", csv_text)
    return OK


# -- synth --------------------------------------------------------------------

def _grammar_config(path):
    from ..synth import GrammarConfig

    if not path:
        return GrammarConfig()
    text = _read(path)
    if str(path).endswith((".yaml", ".yml")):
        import yaml

        data = yaml.safe_load(text) or {}
    else:
        data = json.loads(text)
    names = {f.name for f in dataclasses.fields(GrammarConfig)} - {"kernel"}
    unknown = set(data) - names
    if unknown:
        raise ValueError(f"unknown grammar settings: {', '.join(sorted(unknown))}")
    return GrammarConfig(**{k: tuple(v) if isinstance(v, list) else v for k, v in data.items()})


def cmd_synth(args) -> int:
    from ..synth import DatasetConfig, GenerationExhausted, build_dataset, synthesize_dataset

    try:
        if args.gold:
            golds = load_items(args.gold, GOLD_KEYS)
            cfg = DatasetConfig(descriptions_per_design=args.descriptions, seed=args.seed,
                                provenance="partial-synthetic", shuffle_narrative=args.shuffle,
                                include_skeleton=args.skeleton)
            records = list(build_dataset(sorted(golds.items()), cfg))
        else:
            cfg = DatasetConfig(descriptions_per_design=args.descriptions, seed=args.seed,
                                provenance="full-synthetic", shuffle_narrative=args.shuffle,
                                include_skeleton=args.skeleton)
            records = list(synthesize_dataset(args.n, args.seed, _grammar_config(args.config), cfg))
    except GenerationExhausted as e:
        _err(f"generation failed: {e}")
        return RUNTIME_ERROR
    _emit(args.out, "".join(r.to_json() + "\n" for r in records))
    _err(f"wrote {len(records)} records")
    return OK


# -- render -------------------------------------------------------------------

def cmd_render(args) -> int:
    from .layout_json import import_layout
    from .svg import render_svg

    text = _read(args.layout)
    if args.layout.endswith(".json"):
        doc = import_layout(text)
    else:
        program = parse_program(text)
        diags = errors(static_check(program))
        if diags:
            for d in diags:
                _err(f"{args.layout}:{d}")
            return COMPILE_ERROR
        try:
            doc = execute(program)
        except ExecError as e:
            _err(str(e))
            return RUNTIME_ERROR
    _emit(args.out, render_svg(doc, scale=args.scale))
    return OK


# -- gen ----------------------------------------------------------------------

def cmd_gen(args) -> int:
    from .client import ModelClient, ModelEndpointConfig, ModelError

    endpoint = ModelEndpointConfig(base_url=args.base_url, model=args.model, token_env=args.token_env,
                                   temperature=args.temperature, max_tokens=args.max_tokens)
    client = ModelClient.from_fixture(args.fixture, endpoint) if args.fixture else ModelClient(endpoint)
    template = _read(args.template) if args.template else None
    if args.description is not None:
        items = {"0": args.description}
    else:
        items = load_items(args.input, ("description",))
    rows = []
    try:
        for rid, desc in items.items():
            rows.append({"id": rid, "prediction": client.generate(desc, template)})
    except ModelError as e:
        extra = f" (retry after {e.retry_after:g}s)" if e.retry_after is not None else ""
        _err(f"generation failed: {e}{extra}")
        return RUNTIME_ERROR
    if args.description is not None and not args.out:
        sys.stdout.write(rows[0]["prediction"])
    else:
        _emit(args.out, "".join(json.dumps(r) + "\n" for r in rows))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mbl", description="Modular building layout programs: run, score, synthesize.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="execute a program and export the layout as JSON")
    p.add_argument("program", help="program file ('-' for stdin)")
    p.add_argument("--out", help="layout JSON path (default stdout)")
    p.add_argument("--svg", help="also render the plan to this SVG file")
    p.add_argument("--repair", action="store_true", help="repair static errors before executing")
    p.add_argument("--topology", action="store_true", help="include relation matrices in the JSON")
    p.add_argument("--wall-thickness", type=float, default=100.0)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("eval", help="score predictions against gold programs")
    p.add_argument("--pred", required=True, help="JSONL file, directory of files, or single file")
    p.add_argument("--gold", required=True, help="JSONL file, directory of files, or single file")
    p.add_argument("--coordinate", action="store_true", help="predictions are coordinate sequences (IoU only)")
    p.add_argument("--group-by", choices=("modules", "units", "rooms"))
    p.add_argument("--out", help="directory for records.jsonl, summary.md and summary.csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("synth", help="generate a dataset as JSONL")
    p.add_argument("-n", type=int, default=100, help="number of synthesized designs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config", help="YAML or JSON grammar settings")
    p.add_argument("--gold", help="describe these gold programs instead of synthesizing new ones")
    p.add_argument("--descriptions", type=int, default=1, help="descriptions per design")
    p.add_argument("--shuffle", action="store_true", help="shuffle the narrative order of descriptions")
    p.add_argument("--skeleton", action="store_true", help="add count-only instructions")
    p.add_argument("--out", help="JSONL path (default stdout)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("render", help="draw a layout JSON file or a program as SVG")
    p.add_argument("layout")
    p.add_argument("--out", help="SVG path (default stdout)")
    p.add_argument("--scale", type=float, default=0.05, help="pixels per millimetre")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", help="ask a model endpoint to write programs from descriptions")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--description")
    src.add_argument("--input", help="JSONL with id and description fields")
    p.add_argument("--fixture", help="recorded responses (JSON) to replay instead of calling the endpoint")
    p.add_argument("--template", help="prompt template file")
    p.add_argument("--base-url", default="http://localhost:8000/v1")
    p.add_argument("--model", default="layout-coder")
    p.add_argument("--token-env", default="MBL_API_TOKEN")
    p.add_argument("--temperature", type=float, default=0.0)
    p.add_argument("--max-tokens", type=int, default=2048)
    p.add_argument("--out", help="JSONL of predictions")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as e:
        _err(f"mbl {args.command}: {e}")
        return RUNTIME_ERROR


if __name__ == "__main__":
    sys.exit(main())
