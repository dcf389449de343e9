"""Thue-Morse factor combinatorics, N-block substitutions, and injective
non-constant-length refinements, together with verifiers for the whole chain
of structural claims."""

from .injectivize import (EtaSystem, build_eta, eta_system, initials_map,
                          theorem_report, verify_fixed_point, verify_pair_images,
                          verify_primitivity_argument, verify_theorem, zeta5_fixture)
from .nblock import (NBlockSystem, build_nblock, first_image_index,
                     formula_block_substitution, half_shift, second_image_index,
                     thue_morse_block_system, verify_block_formula)
from .report import CheckEntry, VerificationReport
from .substitution import (Alphabet, IncidenceMatrix, Substitution, compose,
                           length_growth_check, pf_eigenvalue)
from .thue_morse import (FactorSet, QuarterMarkers, apply_theta, descendants,
                         enumerate_by_descendants, enumerate_by_scan, factor_set,
                         quarter_markers, theta, thue_morse_prefix,
                         verify_prefix_pairs, verify_quarter_descendants,
                         verify_quarter_minima)
from .words import EMPTY, BinaryWord, lex_compare, word

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BinaryWord", "CheckEntry", "EMPTY", "EtaSystem", "FactorSet",
    "IncidenceMatrix", "NBlockSystem", "QuarterMarkers", "Substitution",
    "VerificationReport", "apply_theta", "build_eta", "build_nblock", "compose",
    "descendants", "enumerate_by_descendants", "enumerate_by_scan", "eta_system",
    "factor_set", "first_image_index", "formula_block_substitution", "half_shift",
    "initials_map", "length_growth_check", "lex_compare", "pf_eigenvalue",
    "quarter_markers", "second_image_index", "theorem_report", "theta",
    "thue_morse_block_system", "thue_morse_prefix", "verify_block_formula",
    "verify_fixed_point", "verify_pair_images", "verify_prefix_pairs",
    "verify_primitivity_argument", "verify_quarter_descendants",
    "verify_quarter_minima", "verify_theorem", "word", "zeta5_fixture",
]
