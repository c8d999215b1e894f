"""Exact-arithmetic toolkit for unitarizable highest-weight supermodules
over sl(m|n): root data, unitarity classification, atypicality, formal
characters, twists, Witten indices, and the oscillator matrix model."""

__version__ = "0.1.0"

from .rootdata import (
    Root,
    RootDatum,
    build_root_datum,
    bilinear_form,
    even_reflection,
    odd_reflection,
    depth_vector,
)
from .weights import (
    Weight,
    JakobsenParams,
    canonicalize,
    jakobsen_params,
    reconstruct,
    delta_r,
    rho_pairing,
    distinguished_pairings,
    is_integral,
)
from .atypicality import (
    AtypicalityReport,
    vanishing_odd_roots,
    atypicality_degree,
)
from .unitarity import (
    UnitarityVerdict,
    g0_dominance,
    g0_unitarity,
    odd_interlocking,
    g_unitarity_integral,
    region_classify,
    is_absolutely_protected,
)
from .characters import (
    FormalCharacter,
    SupermoduleDescriptor,
    verma_character,
    kac_character,
    generalized_verma_character,
    g0_decomposition_typical,
    fragmentation,
    simple_boundary_character,
    character_of,
)
from .dstwist import (
    SuperchargeDescriptor,
    TwistDatum,
    DSResult,
    rank,
    twist_root_datum,
    restrict_weight,
    ds_simple,
)
from .indices import (
    FugacityPoint,
    IndexValue,
    NotDiscreteSeries,
    LimitOfDiscreteSeries,
    xi_eigenvalue,
    witten_index,
    kmmr_cancellation_check,
    formal_dimension,
    superdimension,
)
from .oscillator import (
    GaussianRational,
    TruncatedFock,
    build_generators,
    family_supercharge,
    formal_kernel,
    norm_series,
    index_family,
    oscillator_indices,
    bps_report,
)
