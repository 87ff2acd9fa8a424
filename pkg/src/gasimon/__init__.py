"""Deterministic simulation of Simon's hidden-mask problem in geometric algebra."""

from .blade import BitString, SignedBlade, blade_product, dot_mod2, grade, product_sign, reverse_sign, xor
from .function_model import (FunctionTable, MaskSpec, OutcomeKind, SimonOutcome, brute_force_solve,
                             generate_masked, generate_one_to_one, has_mask_property, load_table,
                             parse_table)
from .multivector import Multivector
from .pipeline import build_En, build_Fn, run_pipeline, solve

__all__ = [
    "BitString", "SignedBlade", "blade_product", "dot_mod2", "grade", "product_sign", "reverse_sign",
    "xor", "FunctionTable", "MaskSpec", "OutcomeKind", "SimonOutcome", "brute_force_solve",
    "generate_masked", "generate_one_to_one", "has_mask_property", "load_table", "parse_table",
    "Multivector", "build_En", "build_Fn", "run_pipeline", "solve",
]
