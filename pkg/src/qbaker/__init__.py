"""Classical and quantum baker maps coupled through their principal qubits."""

__version__ = "0.1.0"

from .classical import (
    CoupledPhasePoint,
    DyadicPoint,
    PhasePoint,
    baker_step,
    coupled_cnot_step,
    decode_symbols,
    encode_symbols,
    periodic_point,
)
from .coupled import (
    CoupledSpec,
    CouplingGate,
    coupled_baker,
    coupled_mixed_rep,
    schack_caves_b_n2,
    single_control_baker,
)
from .entanglement import (
    HaarSampler,
    entropy_ensemble,
    evolve_entropy_trace,
    evolve_mixed_control,
    haar_state,
    lubkin_mean,
)
from .linalg import eig_general, kron, partial_trace, purity_and_linear_entropy
from .markov import (
    KrausPair,
    apply_channel,
    markov_entropy_trace,
    superop_matrix,
    superop_spectrum,
)
from .quantum import baker_unitary, fourier_g, generating_exponent, reflection_r, vanvleck_check
from .spectral import eigenphases, ks_distance, reference_pdf, unit_mean_spacings
