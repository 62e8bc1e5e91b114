"""
Bakers coupled through their principal qubits.

Compares the four named couplings: which factorize, which keep exchange
symmetry, and which reflection parities survive.
"""
import numpy as np

from qbaker.coupled import GATES, coupled_baker, coupled_mixed_rep, exchange_operator
from qbaker.linalg import kron, unitarity_error
from qbaker.quantum import baker_unitary
from qbaker.spectral import parity_symmetries

d = 8
e = exchange_operator(d)
for gate in GATES:
    u = coupled_baker(d, d, gate)
    product = np.abs(u - kron(baker_unitary(d), baker_unitary(d))).max()
    print(
        f"{gate:9s} unitarity {unitarity_error(u):.1e}  distance to B x B {product:.2f}  "
        f"exchange-symmetric {np.allclose(e @ u @ e, u)}  parities {sorted(parity_symmetries(u, d, d))}"
    )

print("\nCNOT mixed representation, D_c = D_t = 4 (nonzero pattern):")
print((np.abs(coupled_mixed_rep(4, 4, "cnot")) > 0).astype(int))
