"""Classical baker map, its primed stacking, symbolic dynamics, and the CNOT-coupled map.

Coordinates may be floats or ``fractions.Fraction``; with dyadic fractions every
step is exact. The seam convention is half-open: the principal bit is 1 when q >= 1/2.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PhasePoint:
    p: float
    q: float

    def __post_init__(self):
        # ints become Fractions so integer-coordinate inputs stay exact
        for name in ("p", "q"):
            v = getattr(self, name)
            if isinstance(v, int):
                v = Fraction(v)
            object.__setattr__(self, name, v % 1)

    @property
    def bit(self):
        """Principal bit [2q]."""
        return principal_bit(self.q)


@dataclass(frozen=True)
class CoupledPhasePoint:
    control: PhasePoint
    target: PhasePoint


def principal_bit(q):
    return 1 if 2 * q >= 1 else 0


def baker_step(x, stacking="normal"):
    """One step of the baker map b (normal) or b' (primed)."""
    eps = principal_bit(x.q)
    if stacking == "normal":
        top = eps
    elif stacking == "primed":
        top = 1 - eps
    else:
        raise ValueError(f"unknown stacking {stacking!r}")
    return PhasePoint((x.p + top) / 2, 2 * x.q - eps)


def coupled_cnot_step(x):
    """Control runs the ordinary baker; its principal bit picks the target's stacking."""
    ec = principal_bit(x.control.q)
    et = principal_bit(x.target.q)
    target = PhasePoint((x.target.p + (et ^ ec)) / 2, 2 * x.target.q - et)
    return CoupledPhasePoint(baker_step(x.control), target)


def trajectory(x, steps, step=coupled_cnot_step):
    out = [x]
    for _ in range(steps):
        x = step(x)
        out.append(x)
    return out


@dataclass(frozen=True)
class DyadicPoint:
    """Finite symbol string  ... e_-2 e_-1 . e_0 e_1 ...

    ``past`` is (e_-1, e_-2, ...) and ``future`` is (e_0, e_1, ...).
    """

    past: tuple = ()
    future: tuple = ()

    def __post_init__(self):
        for b in self.past + self.future:
            if b not in (0, 1):
                raise ValueError(f"symbols must be 0 or 1, got {b!r}")
        object.__setattr__(self, "past", tuple(self.past))
        object.__setattr__(self, "future", tuple(self.future))

    def shift(self):
        """Move the dot one place right; equals one normal baker step."""
        if not self.future:
            return DyadicPoint((0,) + self.past, ())
        return DyadicPoint((self.future[0],) + self.past, self.future[1:])

    def to_point(self):
        return decode_symbols(self)


def _binary_fraction(bits):
    value = Fraction(0)
    for i, b in enumerate(bits):
        value += Fraction(b, 2 ** (i + 1))
    return value


def decode_symbols(x):
    """q = sum e_i / 2^(i+1),  p = sum e_-i / 2^i, exactly."""
    return PhasePoint(_binary_fraction(x.past), _binary_fraction(x.future))


def encode_symbols(point, steps):
    """First ``steps`` itinerary bits [2 q_i] of a point under the normal map."""
    bits = []
    for _ in range(steps):
        bits.append(point.bit)
        point = baker_step(point)
    return bits


def encode_dyadic(point, n_past, n_future):
    """Inverse of decode_symbols for a point whose coordinates are dyadic with
    at most n_past / n_future binary digits."""
    p, q = Fraction(point.p), Fraction(point.q)
    if (p * 2**n_past).denominator != 1 or (q * 2**n_future).denominator != 1:
        raise ValueError("point is not representable with the requested bit lengths")
    pi, qi = int(p * 2**n_past), int(q * 2**n_future)
    past = tuple((pi >> (n_past - 1 - i)) & 1 for i in range(n_past))
    future = tuple((qi >> (n_future - 1 - i)) & 1 for i in range(n_future))
    return DyadicPoint(past, future)


def periodic_point(word):
    """Exact phase point of the bi-infinite repetition  ...www.www...

    The future reads w repeated from its first symbol; the past reads w
    backwards from its last symbol.
    """
    word = tuple(int(c) for c in word)
    if not word:
        raise ValueError("word must be nonempty")
    n = len(word)
    scale = Fraction(2**n, 2**n - 1)
    q = _binary_fraction(word) * scale
    p = _binary_fraction(word[::-1]) * scale
    return PhasePoint(p, q)
