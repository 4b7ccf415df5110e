"""Basic Whitehead products, Hilton ranks and tensor-algebra checks for wedges of spheres."""

from .alphabet import Alphabet, Family, Generator, Parity, build_em_wedge_alphabet, build_sphere_wedge_alphabet
from .basis import (
    HYBRID,
    LEAF,
    PURE_X,
    PURE_Y,
    BasicProduct,
    classify,
    enumerate_basic_products,
    height,
    is_basic,
    parse_product,
    render_commutator,
    render_whitehead,
    vanishing_skeleton_dim,
)
from .hilton import (
    RankRecord,
    RankTable,
    hilton_rank_table,
    pbw_dimension_oracle,
    r_sequence,
    sphere_rational_ranks,
    split_indecomposable_decomposable,
)
from .report import AutLedgerRow, CensusRow, aut_ledger, census, verify
from .tensoralg import NCPoly, TwoSidedTensor, coproduct, expand, graded_commutator, is_primitive, multiply, span_rank

__version__ = "0.1.0"
