"""Assembling dataset records from gold or synthesized programs."""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from ..dsl import Program, canonicalize, parse_program, to_source
from ..kernel import Config, execute
from .coords import to_coordinate_seq
from .grammar import GrammarConfig, synthesize_code
from .skeleton import skeleton_instruction
from .templates import DEFAULT_BANK, TemplateBank, describe_program

PROVENANCES = ("original", "partial-synthetic", "full-synthetic")


@dataclass
class DatasetRecord:
    id: str
    description: str
    code_named: str
    code_positional: str
    coordinate_seq: str
    provenance: str
    instruction: str = ""
    stats: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "DatasetRecord":
        return cls(**json.loads(line))


@dataclass(frozen=True)
class DatasetConfig:
    descriptions_per_design: int = 1
    seed: int = 0
    provenance: str = "partial-synthetic"
    shuffle_narrative: bool = False
    include_skeleton: bool = False  # fill ``instruction`` with the count-only prompt
    kernel: Config = field(default_factory=Config)


def count_sentences(text: str) -> int:
    return len([s for s in re.split(r"\.(?:\s+|$)", text) if s.strip()])


def record_stats(description: str, code: str, counts: dict) -> dict:
    return {
        "description_tokens": len(description.split()),
        "description_sentences": count_sentences(description),
        "code_tokens": len(code.split()),
        "code_sentences": code.count(";"),
        "modules": counts["module"], "units": counts["unit"],
        "rooms": counts["room"], "elements": counts["element"],
    }


def make_records(rid: str, program: Program, cfg: DatasetConfig, bank: TemplateBank = DEFAULT_BANK,
                 provenance: str | None = None) -> list[DatasetRecord]:
    doc = execute(program, cfg.kernel)
    named, positional = canonicalize(program), to_source(program, "positional")
    coords = to_coordinate_seq(doc)
    instruction = skeleton_instruction(doc) if cfg.include_skeleton else ""
    counts = doc.counts()
    out = []
    n = cfg.descriptions_per_design
    for k in range(n):
        text = describe_program(program, bank, seed=f"{cfg.seed}/{rid}/{k}", shuffle=cfg.shuffle_narrative)
        out.append(DatasetRecord(rid if n == 1 else f"{rid}-{k}", text, named, positional, coords,
                                 provenance or cfg.provenance, instruction, record_stats(text, named, counts)))
    return out


def build_dataset(golds: Iterable[tuple[str, Program | str]], config: DatasetConfig | None = None,
                  bank: TemplateBank = DEFAULT_BANK) -> Iterator[DatasetRecord]:
    """Records for every gold program; ``descriptions_per_design`` each."""
    cfg = config or DatasetConfig()
    for rid, prog in golds:
        program = prog if isinstance(prog, Program) else parse_program(prog)
        yield from make_records(str(rid), program, cfg, bank)


def synthesize_dataset(n: int, seed: int = 0, grammar: GrammarConfig | None = None,
                       config: DatasetConfig | None = None) -> Iterator[DatasetRecord]:
    """``n`` records with distinct programs, fully determined by ``seed``."""
    cfg = config or DatasetConfig(seed=seed, provenance="full-synthetic")
    seen: set[str] = set()
    k = 0
    made = 0
    while made < n:
        program = synthesize_code(grammar, seed=f"{seed}:{k}")
        k += 1
        text = canonicalize(program)
        if text in seen:
            continue
        seen.add(text)
        yield from make_records(f"syn-{made:05d}", program, cfg, provenance="full-synthetic")
        made += 1


def write_jsonl(records: Iterable[DatasetRecord], path) -> int:
    from ..harness.io import atomic_write_text

    lines = [r.to_json() for r in records]
    atomic_write_text(path, "".join(line + "\n" for line in lines))
    return len(lines)


def read_jsonl(path) -> list[DatasetRecord]:
    with open(path, encoding="utf-8") as fh:
        return [DatasetRecord.from_json(line) for line in fh if line.strip()]
