"""Synthetic programs, descriptions and baseline output formats."""
from .coords import FormatError, boxes_from_text, parse_coordinate_seq, to_coordinate_seq
from .dataset import (DatasetConfig, DatasetRecord, build_dataset, make_records, read_jsonl, synthesize_dataset,
                      write_jsonl)
from .grammar import GenerationExhausted, GrammarConfig, synthesize_code
from .skeleton import parse_skeleton, skeleton_instruction
from .templates import (BANK, DEFAULT_BANK, PHRASES, MissingTemplate, TemplateBank, describe_program,
                        describe_sentences,
                        extract_slots, scenario_of, verbalize)

__all__ = [
    "FormatError", "boxes_from_text", "parse_coordinate_seq", "to_coordinate_seq",
    "DatasetConfig", "DatasetRecord", "build_dataset", "make_records", "read_jsonl", "synthesize_dataset",
    "write_jsonl", "GenerationExhausted", "GrammarConfig", "synthesize_code", "parse_skeleton",
    "skeleton_instruction", "BANK", "DEFAULT_BANK", "PHRASES", "MissingTemplate", "TemplateBank", "describe_program",
    "describe_sentences", "extract_slots", "scenario_of", "verbalize",
]
