"""
Classical baker map and its symbolic dynamics.

Points with finite binary expansions evolve exactly under Fraction arithmetic,
and one map step is a one-place shift of the symbol string.
"""
from fractions import Fraction

from qbaker.classical import (
    CoupledPhasePoint,
    DyadicPoint,
    PhasePoint,
    baker_step,
    coupled_cnot_step,
    decode_symbols,
    periodic_point,
    trajectory,
)

# the period-2 orbit ...01.01... <-> ...10.10...
x = periodic_point("01")
print("period-2 orbit:", x, "->", baker_step(x), "->", baker_step(baker_step(x)))

# shift conjugacy on a finite code
code = DyadicPoint(past=(1, 1, 0), future=(0, 1, 1, 0, 1))
pt = decode_symbols(code)
for k in range(5):
    print(k, "".join(map(str, code.past[::-1])), ".", "".join(map(str, code.future)), pt)
    code, pt = code.shift(), baker_step(pt)

# CNOT coupling: the control never notices the target
c = PhasePoint(Fraction(3, 7), Fraction(5, 11))
for qt in (Fraction(1, 5), Fraction(4, 5)):
    traj = trajectory(CoupledPhasePoint(c, PhasePoint(Fraction(1, 3), qt)), 6)
    print("target q0 =", qt, "control q:", [str(p.control.q) for p in traj])
    print("                 target p:", [str(p.target.p) for p in traj])
