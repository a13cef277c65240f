"""Length and composition statistics of a synthetic corpus."""
import argparse
from collections import Counter
from dataclasses import dataclass

import numpy as np

from mblkit.synth import synthesize_dataset


@dataclass(frozen=True)
class StatsConfig:
    n: int = 500
    seed: int = 0


FIELDS = ("description_tokens", "description_sentences", "code_tokens", "code_sentences",
          "modules", "units", "rooms", "elements")


def summarize(records) -> str:
    rows = ["| field | mean | std | min | p50 | p90 | max |", "|---|---|---|---|---|---|---|"]
    for f in FIELDS:
        v = np.array([r.stats[f] for r in records], dtype=float)
        rows.append(f"| {f} | {v.mean():.1f} | {v.std():.1f} | {v.min():.0f} | {np.median(v):.0f} | "
                    f"{np.percentile(v, 90):.0f} | {v.max():.0f} |")
    return "\n".join(rows)


def action_mix(records) -> str:
    from mblkit.dsl import parse_strict

    mix = Counter(st.op_kind for r in records for st in parse_strict(r.code_named))
    total = sum(mix.values())
    return "\n".join(f"{k:<20} {v:>7} {100 * v / total:5.1f}%" for k, v in mix.most_common())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=StatsConfig.n)
    ap.add_argument("--seed", type=int, default=StatsConfig.seed)
    cfg = StatsConfig(**vars(ap.parse_args()))
    records = list(synthesize_dataset(cfg.n, seed=cfg.seed))
    print(summarize(records))
    print()
    print(action_mix(records))


if __name__ == "__main__":
    main()
