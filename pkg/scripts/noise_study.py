"""How the scores respond to dimension noise and dropped statements in predictions.

Each synthetic gold program is perturbed at several noise levels and the
perturbed copy is scored against the original.
"""
import argparse
import random
from dataclasses import dataclass, replace

from mblkit.dsl import Program, parse_strict, to_source
from mblkit.metrics import batch_evaluate, format_table
from mblkit.synth import synthesize_dataset

SIZE_ARGS = {"length", "width", "dimension", "offset"}


@dataclass(frozen=True)
class NoiseLevel:
    jitter_mm: float = 0.0  # magnitude added to a perturbed size argument
    p_jitter: float = 0.0  # chance that a size argument is perturbed
    p_drop: float = 0.0  # chance that a statement is removed


LEVELS = {
    "clean": NoiseLevel(),
    "jitter 0.4 mm": NoiseLevel(0.4, 0.3),
    "jitter 50 mm": NoiseLevel(50, 0.1),
    "jitter 300 mm": NoiseLevel(300, 0.3),
    "drop 5%": NoiseLevel(p_drop=0.05),
    "drop 20%": NoiseLevel(p_drop=0.2),
}


def _jitter(value: float, level: NoiseLevel, rng: random.Random) -> float:
    # offsets are non-negative by type, so noise never crosses zero
    return max(0.0, value + rng.choice((-1, 1)) * level.jitter_mm)


def perturb(source: str, level: NoiseLevel, rng: random.Random) -> str:
    program = parse_strict(source)
    out = []
    for st in program.statements:
        if rng.random() < level.p_drop:
            continue
        args = tuple(replace(a, value=_jitter(a.value, level, rng))
                     if a.name in SIZE_ARGS and isinstance(a.value, (int, float)) and not isinstance(a.value, bool)
                     and rng.random() < level.p_jitter else a
                     for a in st.args)
        out.append(replace(st, args=args))
    return to_source(Program(statements=out))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rows = [{"id": r.id, "code": r.code_named} for r in synthesize_dataset(args.n, seed=args.seed)]
    for name, level in LEVELS.items():
        rng = random.Random(f"{args.seed}/{name}")
        preds = {r["id"]: perturb(r["code"], level, rng) for r in rows}
        result = batch_evaluate(rows, preds)
        print(f"### {name}")
        print(format_table(result.means))
        print()


if __name__ == "__main__":
    main()
