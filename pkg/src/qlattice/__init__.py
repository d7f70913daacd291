"""Computations in the lattice of subspaces of a finite-dimensional Hilbert space."""

from .exceptions import (
    DimensionMismatch,
    EvenDimensionError,
    InvalidStateError,
    PreconditionError,
    QLatticeError,
    ValidationError,
)
from .finite import (
    FiniteSystem,
    family_coherent,
    family_position,
    family_position_complement,
    family_position_momentum,
    fourier_matrix,
)
from .independence import (
    DegreeReport,
    LevelReport,
    OrthogonalExpansion,
    compare_independence,
    degree_of_independence,
    degree_of_totalness,
    direct_sum_components,
    dual_family,
    expand_vector,
    independence_level,
    independence_matrix,
    orthogonal_expansion,
    totalness_level,
    totalness_matrix,
)
from .lattice import (
    Subspace,
    SubspaceFamily,
    commutes,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    orthocomplement,
    subspace_equal,
)
from .numeric import DEFAULT_TOLERANCE, TolerancePolicy
from .partitions import (
    Partition,
    block_intersection_witness,
    informationally_independent,
    measurement_collapse,
    partition_complement,
    partition_join,
    partition_leq,
    partition_meet,
)
from .pentagram import max_violation, pentagram_analysis, pentagram_states
from .quasiprob import DensityMatrix, QuasiProbProfile, frak_H, frak_h, profile

__version__ = "0.1.0"
