"""Simulation and brute-force verification of multi-party superdense coding
with d-level systems."""

__version__ = "0.1.0"

from .bell import (
    BellLabel,
    basis_labels,
    basis_matrix,
    bell_state,
    enumerate_basis,
    gram_matrix,
    shared_initial_state,
)
from .core import (
    DEFAULT_CAP,
    LocalMatrix,
    PureState,
    RegisterShape,
    apply_local,
    basis_ket,
    inner_product,
    root_of_unity,
)
from .decodability import (
    DecodabilityReport,
    PlanSearch,
    TransformationTable,
    one_per_coset_plans,
    search_restricted_plans,
    transformation_table,
    verify_plan,
)
from .errors import (
    AmbiguousState,
    BudgetExceeded,
    CapExceeded,
    DecodeCollision,
    LabelError,
    NonUnitaryError,
    PlanError,
    QdcError,
    ShapeError,
)
from .protocol import (
    ProtocolTranscript,
    SenderPlan,
    born_probabilities,
    born_sample,
    born_samples,
    canonical_plan,
    capacity_bits,
    decoding_table,
    encode,
    make_plan,
    measure_decode,
    roundtrip,
)
from .weyl import WeylLabel, shift_coset, shift_cosets, weyl_action_label, weyl_labels, weyl_unitary
