"""Real Gamma-family functions and the Gauss hypergeometric function on [0, 1].

Everything here is scalar, pure and reentrant.  The parameter families that
matter downstream satisfy a + b = n and c = n + 1/2 (so c - a - b = 1/2), but
the evaluators are written for generic real parameters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Hyp2F1ConvergenceError",
    "Hyp2F1Params",
    "ln_gamma",
    "gamma_fn",
    "recip_gamma",
    "pochhammer",
    "hyp2f1",
    "hyp2f1_near_one",
    "hyp2f1_auto",
    "hyp2f1_dz",
    "gauss_value_at_one",
]

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LN_SQRT_2PI = 0.91893853320467274178

SERIES_TERM_BUDGET = 500
SERIES_RTOL = 1e-14
X_SWITCH = 0.5


class Hyp2F1ConvergenceError(RuntimeError):
    """Raised when the hypergeometric series fails to meet tolerance in budget."""


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos, reflection below 1/2)."""
    if x <= 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    if x < 0.5:
        # Gamma(x) Gamma(1-x) = pi / sin(pi x); x in (0, 1/2) keeps sin positive
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LN_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def _sin_pi(x: float) -> float:
    """sin(pi x) with exact argument reduction (accurate near integers)."""
    k = round(x)
    r = x - k
    s = math.sin(math.pi * r)
    return -s if (k % 2) else s


def gamma_fn(x: float) -> float:
    """Gamma(x) for real non-pole x (reflection for x < 0.5)."""
    if x >= 0.5:
        return math.exp(ln_gamma(x))
    if _is_nonpositive_integer(x):
        raise ValueError(f"Gamma pole at {x}")
    return math.pi / (_sin_pi(x) * math.exp(ln_gamma(1.0 - x)))


def recip_gamma(x: float) -> float:
    """1/Gamma(x); entire, exactly zero at non-positive integers."""
    if x > 0.5:
        return math.exp(-ln_gamma(x))
    if _is_nonpositive_integer(x):
        return 0.0
    return _sin_pi(x) * math.exp(ln_gamma(1.0 - x)) / math.pi


def pochhammer(d: float, k: int) -> float:
    """Rising factorial d (d+1) ... (d+k-1); empty product is 1."""
    if k < 0:
        raise ValueError("pochhammer index must be non-negative")
    out = 1.0
    for i in range(k):
        out *= d + i
    return out


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameter triple (a, b, c) of the Gauss hypergeometric series."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if _is_nonpositive_integer(self.c):
            m = self.terminating_index()
            if m is None or m > -self.c:
                raise ValueError(
                    f"c={self.c} is a non-positive integer and the series does "
                    f"not terminate before the pole"
                )

    def terminating_index(self) -> int | None:
        """Degree of the terminating polynomial, or None if infinite."""
        cands = [int(-v) for v in (self.a, self.b) if _is_nonpositive_integer(v)]
        return min(cands) if cands else None

    def shifted(self, by: int = 1) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a + by, self.b + by, self.c + by)


def hyp2f1(p: Hyp2F1Params, x: float) -> float:
    """Direct series sum of F(a, b; c; x).

    Terminating series are summed exactly for any real x; otherwise x must
    lie in [0, 1) and the partial sums must meet SERIES_RTOL within
    SERIES_TERM_BUDGET terms.
    """
    m = p.terminating_index()
    if m is not None:
        term = 1.0
        acc = 1.0
        for k in range(m):
            term *= (p.a + k) * (p.b + k) / ((k + 1.0) * (p.c + k)) * x
            acc += term
        return acc
    if not 0.0 <= x < 1.0:
        raise ValueError(f"non-terminating series needs 0 <= x < 1, got {x}")
    term = 1.0
    acc = 1.0
    small = 0
    for k in range(SERIES_TERM_BUDGET):
        term *= (p.a + k) * (p.b + k) / ((k + 1.0) * (p.c + k)) * x
        acc += term
        if abs(term) <= SERIES_RTOL * abs(acc):
            small += 1
            if small >= 2:
                return acc
        else:
            small = 0
    raise Hyp2F1ConvergenceError(f"series for {p} at x={x} did not converge")


def gauss_value_at_one(p: Hyp2F1Params) -> float:
    """F(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))."""
    s = p.c - p.a - p.b
    if s <= 0.0:
        raise ValueError(f"F(a,b;c;1) needs c-a-b > 0, got {s}")
    return (gamma_fn(p.c) * gamma_fn(s)
            * recip_gamma(p.c - p.a) * recip_gamma(p.c - p.b))


def hyp2f1_near_one(p: Hyp2F1Params, x: float) -> float:
    """F(a, b; c; x) by the two-term connection formula in (1 - x).

    Requires c - a - b non-integer.  Terminating parameter triples bypass the
    transformation and go through the exact polynomial sum.
    """
    if p.terminating_index() is not None:
        return hyp2f1(p, x)
    s = p.c - p.a - p.b
    if s == math.floor(s):
        raise ValueError(f"connection formula needs non-integer c-a-b, got {s}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"need 0 <= x <= 1, got {x}")
    y = 1.0 - x
    c1 = (gamma_fn(p.c) * gamma_fn(s)
          * recip_gamma(p.c - p.a) * recip_gamma(p.c - p.b))
    c2 = (gamma_fn(p.c) * gamma_fn(-s)
          * recip_gamma(p.a) * recip_gamma(p.b))
    out = 0.0
    if c1 != 0.0:
        out += c1 * hyp2f1(Hyp2F1Params(p.a, p.b, p.a + p.b - p.c + 1.0), y)
    if c2 != 0.0:
        if y == 0.0:
            if s < 0.0:
                raise ValueError(f"F{p} diverges at x=1 (c-a-b={s} < 0)")
        else:
            out += c2 * y ** s * hyp2f1(Hyp2F1Params(p.c - p.a, p.c - p.b, s + 1.0), y)
    return out


def hyp2f1_auto(p: Hyp2F1Params, x: float) -> float:
    """Evaluate F(a, b; c; x) on [0, 1], dispatching at X_SWITCH.

    Integer c - a - b (never the case for the in-scope families) falls back
    to the direct series, which still converges for x < 1.
    """
    if p.terminating_index() is not None or x < X_SWITCH:
        return hyp2f1(p, x)
    s = p.c - p.a - p.b
    if s == math.floor(s):
        return hyp2f1(p, x)
    return hyp2f1_near_one(p, x)


def hyp2f1_dz(p: Hyp2F1Params, x: float) -> float:
    """d/dx F(a, b; c; x) = (a b / c) F(a+1, b+1; c+1; x)."""
    return p.a * p.b / p.c * hyp2f1_auto(p.shifted(1), x)
