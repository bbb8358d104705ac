"""Exact toolkit for almost affine codes, their matroids, trellises and wiretap coset schemes."""

from .code import (
    BlockCode,
    SubcodeHandle,
    access_structure,
    are_equivalent,
    code_support,
    count_words_with_support,
    critical_exponent,
    dlp,
    enumerate_subcodes,
    fixed_subcode,
    ghw_via_codewords,
    ghw_via_matroid,
    ghw_via_subcodes,
    kung_bound_report,
    load_code,
    minimal_codewords,
    support,
)
from .constructions import (
    GeneratorMatrix,
    folded_rs,
    interleave,
    linear_code,
    linear_code_matroids,
    multilinear_dual,
    reed_solomon,
    running_example_cprime,
)
from .field import FiniteField
from .matroid import Matroid, mask_of, positions, uniform
from .trellis import Trellis, build_min_trellis, vertex_bound_report, viterbi_decode
from .wiretap import SideMap, WiretapScheme, decode, encode, equivocation_profile, lambda_set, make_scheme

__version__ = "0.1.0"
