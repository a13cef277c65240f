"""Parsing, checking, canonical printing and repair of layout action programs."""
from .ast import INITIAL_POINT, ActionStatement, Arg, Diagnostic, ListLit, PointLit, Program, Ref
from .check import errors, static_check
from .parser import parse_program, parse_strict, tokenize
from .printer import canonicalize, format_statement, to_source
from .repair import RepairPolicy, Unrepairable, build_statement, repair_program
from .signatures import BY_KEY, OP_KINDS, SIGNATURES, signature_table

__all__ = [
    "INITIAL_POINT", "ActionStatement", "Arg", "Diagnostic", "ListLit", "PointLit", "Program", "Ref",
    "errors", "static_check", "parse_program", "parse_strict", "tokenize",
    "canonicalize", "format_statement", "to_source",
    "RepairPolicy", "Unrepairable", "build_statement", "repair_program",
    "BY_KEY", "OP_KINDS", "SIGNATURES", "signature_table",
]
