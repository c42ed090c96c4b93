"""Sequential (in-place) interpretation of matrices over exact fields.

Compiles linear maps into memory-optimal straight-line assignment
programs, builds regular sequential constructors of matrices and
reflexive digraphs, and explores the finite dynamical system the
constructor map induces on regular GF(2) matrices.
"""

from .dynamics import (
    CENSUS_MAX_N,
    DEFAULT_MAX_ITER,
    CensusReport,
    OrbitReport,
    census,
    load_orbit_seed,
    orbit,
    phi,
    trajectory,
)
from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    GuardError,
    InvariantViolation,
    NotInvertibleError,
    ParseError,
    PreconditionError,
    SeqmatError,
)
from .fields import (
    GF2,
    RATIONAL,
    FieldKind,
    FieldSpec,
    Scalar,
    add,
    field_parse,
    gfp,
    inv,
    mul,
    neg,
    scalar_parse,
)
from .formats import (
    format_coding,
    format_matrix,
    format_program,
    format_vector,
    parse_coding,
    parse_matrix,
    parse_vector,
)
from .graphs import (
    Digraph,
    chain_rewrite,
    constructor_of,
    constructs,
    graph_equivalent,
    is_reflexive,
    linorder_rewrite,
    to_dot,
)
from .matrix import (
    Assignment,
    Matrix,
    StraightLineProgram,
    Vector,
    is_regular,
    is_similar,
    pack_gf2_rows,
    parallel_apply,
    program_apply,
    program_symbolic,
    seq_apply,
    seq_equivalent,
    seq_matrix,
    seq_program,
    set_diag_ones,
    unpack_gf2_rows,
)
from .regularize import (
    regularize,
    regularize_general,
    regularize_packed,
    regularize_trace,
)
from .sequentialize import (
    PREIMAGE_MAX_CANDIDATES,
    InSituCoding,
    PermCoding,
    decode_coding,
    preimage_search,
    sequentialize,
    sequentialize_perm,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CENSUS_MAX_N",
    "CensusReport",
    "DEFAULT_MAX_ITER",
    "Digraph",
    "DimensionMismatchError",
    "FieldKind",
    "FieldMismatchError",
    "FieldSpec",
    "GF2",
    "GuardError",
    "InSituCoding",
    "InvariantViolation",
    "Matrix",
    "NotInvertibleError",
    "OrbitReport",
    "ParseError",
    "PermCoding",
    "PreconditionError",
    "PREIMAGE_MAX_CANDIDATES",
    "RATIONAL",
    "Scalar",
    "SeqmatError",
    "StraightLineProgram",
    "Vector",
    "add",
    "census",
    "chain_rewrite",
    "constructor_of",
    "constructs",
    "decode_coding",
    "field_parse",
    "format_coding",
    "format_matrix",
    "format_program",
    "format_vector",
    "gfp",
    "graph_equivalent",
    "inv",
    "is_reflexive",
    "is_regular",
    "is_similar",
    "load_orbit_seed",
    "mul",
    "neg",
    "orbit",
    "pack_gf2_rows",
    "parallel_apply",
    "parse_coding",
    "parse_matrix",
    "parse_vector",
    "phi",
    "preimage_search",
    "program_apply",
    "program_symbolic",
    "regularize",
    "regularize_general",
    "regularize_packed",
    "regularize_trace",
    "scalar_parse",
    "seq_apply",
    "seq_equivalent",
    "seq_matrix",
    "seq_program",
    "sequentialize",
    "sequentialize_perm",
    "set_diag_ones",
    "to_dot",
    "trajectory",
    "unpack_gf2_rows",
]
