"""Isotopy, hyperbolicity and census of weaves from their weaving diagrams."""
from .core import (
    ComponentId,
    CrossingMatrix,
    Fingerprint,
    IllegalMoveError,
    Kind,
    MatrixFormatError,
    SwapWarps,
    SwapWefts,
    Translate,
    WeaveError,
    Warp,
    Weft,
    apply,
    can_apply,
    comparable,
    complement,
    fingerprint,
    reflect_warps,
    reflect_wefts,
    replay,
    transpose_dual,
    validate,
)
from .isotopy import (
    CanonicalForm,
    NotIsotopicError,
    Orbit,
    OrbitBudgetExceeded,
    canonical_form,
    homeo_canonical_form,
    is_homeomorphic,
    is_isotopic,
    isotopy_witness,
    orbit,
)
from .hyperbolicity import (
    V_OCT,
    HyperbolicityVerdict,
    JsjReport,
    LayerVerdict,
    ParallelWitness,
    Verdict,
    is_hyperbolic,
    is_layered,
    is_pi_hyperbolic,
    jsj_report,
    layer_digraph,
    no_adjacent_comparable,
    parallel_pair_oracle,
    parallel_pair_reachable,
    volume_upper_bound,
)
from .census import CensusConfig, CensusRow, bound_check, census, enumerate_weaves, proportion_trend
from .formats import WeaveDocument, parse_text, render, serialize_text
from .generators import plain, satin, twill

__version__ = "0.1.0"
