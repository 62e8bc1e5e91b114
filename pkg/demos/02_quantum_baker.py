"""
The quantum baker map on the half-integer grid.

Builds both stackings, checks unitarity, the block (mixed) form, the entrywise
generating-function form, and the reflection symmetry.
"""
import numpy as np

from qbaker.linalg import unitarity_error
from qbaker.quantum import baker_unitary, fourier_g, reflection_r, vanvleck_check

for d in (2, 8, 64, 256):
    b, bp = baker_unitary(d), baker_unitary(d, "primed")
    r = reflection_r(d)
    print(
        f"D={d:4d}  unitarity {unitarity_error(b):.1e}/{unitarity_error(bp):.1e}  "
        f"Van Vleck {vanvleck_check(d):.1e}  [R,B] {np.abs(r @ b - b @ r).max():.1e}  "
        f"[R,B'] {np.abs(r @ bp - bp @ r).max():.1e}"
    )

d = 8
mixed = fourier_g(d) @ baker_unitary(d)
print("\n|<p_m|B|q_n>| * sqrt(D/2) for D=8 (block diagonal):")
print(np.round(np.abs(mixed) * np.sqrt(d / 2), 3))
