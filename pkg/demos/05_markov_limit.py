"""
The target as an open system: the stacking-average channel versus the full
unitary dynamics with a maximally mixed control.
"""
import numpy as np

from qbaker.cli import compare_traces
from qbaker.markov import KrausPair, superop_matrix, superop_spectrum
from qbaker.quantum import reflection_r

D_T = 16
rep = superop_spectrum(superop_matrix(KrausPair.baker(D_T)))
print(f"superoperator: {len(rep.eigenvalues)} eigenvalues, {rep.unit_count} at lambda=1, "
      f"next largest |lambda| = {rep.second_modulus:.4f}")
print("fixed space residual for span{I, R}:", rep.span_residual([np.eye(D_T), reflection_r(D_T)]))

markov, unitary = compare_traces(D_T, (8, 16, 32, 64), steps=25, seed=7)
print("\nstep  markov   " + "  ".join(f"D_c={d:<3d}" for d in unitary))
for k in range(0, 26, 5):
    print(f"{k:4d}  {markov[k]:.4f}  " + "  ".join(f"{tr[k]:.4f} " for tr in unitary.values()))
for d, tr in unitary.items():
    print(f"D_c={d}: max |unitary - markov| = {np.abs(tr - markov).max():.2e}")
