"""Generalized trigonometric functions.

For exponents p, q > 1 the arc-length integral

    F(x) = integral_0^x (1 - t**q)**(-1/p) dt,   x in [0, 1],

is strictly increasing; its inverse is the generalized sine ``sin_pq`` on
[0, pi_pq/2], where pi_pq = 2 F(1) is the generalized half-period constant.
The function extends to all of R by the reflection sin_pq(pi_pq - x), then as
the odd 2 pi_pq periodic continuation.  The generalized cosine is the
derivative of the extended sine and satisfies

    |cos_pq x|**p + |sin_pq x|**q = 1.

For (p, q) = (2, 2) all of this reduces to the circular functions and pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import integrate_endpoint_singular, solve_increasing

__all__ = [
    "ParamPair",
    "EvalConfig",
    "FunctionValue",
    "DEFAULT_CONFIG",
    "pi_pq",
    "arcsin_pq",
    "sin_pq",
    "cos_pq",
    "sin_cos",
    "ode_residual",
    "fractional_power",
]

# Exponents this close to 1 (or huge) make the endpoint singularity exponent
# -1/p approach -1 and the quadrature conditioning collapse; reject instead of
# silently losing precision.
_P_MIN = 1.0
_P_MAX = 1000.0


@dataclass(frozen=True)
class ParamPair:
    """A validated exponent pair (p, q) indexing one generalized sine/cosine."""

    p: float
    q: float

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("q", self.q)):
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise DomainError(f"{name} must be a finite real, got {value!r}")
            if not (_P_MIN < value <= _P_MAX):
                raise DomainError(
                    f"{name} must exceed 1 (and be at most {_P_MAX:g}), got {value!r}"
                )

    @property
    def p_star(self) -> float:
        """Conjugate exponent p/(p-1), so 1/p + 1/p_star = 1."""
        return self.p / (self.p - 1.0)

    @property
    def q_star(self) -> float:
        """Conjugate exponent q/(q-1)."""
        return self.q / (self.q - 1.0)

    def dual(self) -> "ParamPair":
        """The pair (q_star, p_star) that the duality relations pair with (p, q)."""
        return ParamPair(self.q_star, self.p_star)


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and caps governing all numerics."""

    quad_tol: float = 1e-13
    root_tol: float = 1e-13
    identity_tol: float = 1e-9
    max_iter: int = 100
    fd_step: float = 1e-5

    def __post_init__(self) -> None:
        if not (self.quad_tol > 0 and self.root_tol > 0 and self.identity_tol > 0):
            raise DomainError("all tolerances must be positive")
        if not (self.fd_step > 0):
            raise DomainError("fd_step must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class FunctionValue:
    """A sine/cosine value plus where its argument landed after reduction.

    ``quadrant`` counts quarter-periods within one full period (boundary
    points belong to the quadrant on their right, i.e. quadrants are closed on
    the left), and ``reduced_x`` is the argument folded into [0, pi_pq/2].
    """

    value: float
    quadrant: int
    reduced_x: float

    def __float__(self) -> float:
        return self.value


# Write-once concurrent maps; racing first computations of a key is benign
# because both compute identical values.
_PI_CACHE: dict[tuple[float, float, float], float] = {}
_TABLE_CACHE: dict[tuple[float, float, float], tuple[np.ndarray, ...]] = {}

_TABLE_SIZE = 33


def _arc_integral(p: float, q: float, s: float, tol: float) -> float:
    """F(s) for s in [0, 1], with the (possible) singularity mapped to a zero
    lower endpoint.

    Substituting t = s (1 - w) gives F(s) = s * integral_0^1 f(w) dw with
    f(w) = (1 - (s(1-w))**q)**(-1/p); the base 1 - (s(1-w))**q is evaluated as
    -expm1(q (log s + log1p(-w))) which stays fully accurate as w -> 0 even
    when s = 1.
    """
    if s <= 0.0:
        return 0.0
    ln_s = math.log(s)
    inv_p = -1.0 / p

    def f(w: np.ndarray) -> np.ndarray:
        return np.power(-np.expm1(q * (ln_s + np.log1p(-w))), inv_p)

    return s * integrate_endpoint_singular(f, 0.0, 1.0, tol).value


def _arc_tail(p: float, q: float, v: float, tol: float) -> float:
    """F(1) - F(1 - v) = integral_0^v (1 - (1-u)**q)**(-1/p) du for v in [0, 1].

    The integration variable is the distance below the upper limit of F, so
    the singular end sits at u = 0 where float spacing is no obstacle.
    """
    if v <= 0.0:
        return 0.0
    inv_p = -1.0 / p

    def f(u: np.ndarray) -> np.ndarray:
        return np.power(-np.expm1(q * np.log1p(-u)), inv_p)

    return integrate_endpoint_singular(f, 0.0, v, tol).value


def pi_pq(pp: ParamPair, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """The generalized circle constant pi_pq = 2 F(1), cached per (p, q)."""
    key = (pp.p, pp.q, config.quad_tol)
    value = _PI_CACHE.get(key)
    if value is None:
        value = 2.0 * _arc_integral(pp.p, pp.q, 1.0, config.quad_tol)
        _PI_CACHE[key] = value
    return value


def _lookup_tables(pp: ParamPair, config: EvalConfig) -> tuple[np.ndarray, ...]:
    """Coarse monotone tables of F and of the tail integral, used only to
    seed tight root brackets (the solves below stay exact to tolerance)."""
    key = (pp.p, pp.q, config.quad_tol)
    tables = _TABLE_CACHE.get(key)
    if tables is not None:
        return tables
    p, q, pstar = pp.p, pp.q, pp.p_star
    s_grid = np.linspace(0.0, 1.0, _TABLE_SIZE)
    f_grid = np.array([_arc_integral(p, q, s, config.quad_tol) for s in s_grid])
    w_grid = np.linspace(0.0, 1.0, _TABLE_SIZE)
    h_grid = np.array(
        [_arc_tail(p, q, w**pstar, config.quad_tol) for w in w_grid]
    )
    tables = (s_grid, f_grid, w_grid, h_grid)
    _TABLE_CACHE[key] = tables
    return tables


def _bracket(
    grid: np.ndarray, values: np.ndarray, target: float
) -> tuple[float, float, float, float]:
    """Table cell [grid[j], grid[j+1]] whose stored values bracket target."""
    j = int(np.searchsorted(values, target, side="right")) - 1
    j = min(max(j, 0), grid.size - 2)
    return float(grid[j]), float(grid[j + 1]), float(values[j]), float(values[j + 1])


def _solve_reduced(
    pp: ParamPair, r: float, half_pi: float, config: EvalConfig
) -> tuple[float, float]:
    """Invert F on the reduced interval: return (s, 1 - s) with F(s) = r.

    The complement 1 - s is solved for directly when r lies in the upper half
    of [0, half_pi], in the variable v = w**p_star that straightens out the
    infinite derivative of F at s = 1; this keeps full precision in the
    cosine magnitude (1 - s**q)**(1/p) arbitrarily close to the quarter
    period.  Residual tolerances scale with the target so small values keep
    relative accuracy.
    """
    p, q = pp.p, pp.q
    if r <= 0.0:
        return 0.0, 1.0
    if r >= half_pi:
        return 1.0, 0.0
    quad_tol = config.quad_tol
    s_grid, f_grid, w_grid, h_grid = _lookup_tables(pp, config)

    if r <= 0.5 * half_pi:
        tol = config.root_tol * min(1.0, r)

        def f(s: float) -> float:
            return _arc_integral(p, q, s, quad_tol)

        def df(s: float) -> float:
            base = 1.0 - s**q
            return math.inf if base <= 0.0 else base ** (-1.0 / p)

        lo, hi, v_lo, v_hi = _bracket(s_grid, f_grid, r)
        s = solve_increasing(
            f, lo, hi, r, deriv=df, tol=tol, max_iter=config.max_iter,
            f_lo=v_lo, f_hi=v_hi,
        )
        return s, 1.0 - s

    # complementary solve: H(w**p_star) = half_pi - r (exact subtraction here
    # since r >= half_pi / 2)
    delta = half_pi - r
    pstar = pp.p_star
    tol = config.root_tol * min(1.0, delta)

    def fw(w: float) -> float:
        return _arc_tail(p, q, w**pstar, quad_tol)

    def dfw(w: float) -> float:
        v = w**pstar
        base = 1.0 if v >= 1.0 else -math.expm1(q * math.log1p(-v))
        if base <= 0.0 or w <= 0.0:
            return math.inf
        return base ** (-1.0 / p) * pstar * w ** (pstar - 1.0)

    lo, hi, v_lo, v_hi = _bracket(w_grid, h_grid, delta)
    w = solve_increasing(
        fw, lo, hi, delta, deriv=dfw, tol=tol, max_iter=config.max_iter,
        f_lo=v_lo, f_hi=v_hi,
    )
    v = w**pstar
    return 1.0 - v, v


def _reduce(pp: ParamPair, x: float, config: EvalConfig) -> tuple[int, float, float]:
    """Fold x into (quadrant, reduced argument in [0, pi_pq/2], pi_pq/2)."""
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    half_pi = 0.5 * pi_pq(pp, config)
    period = 4.0 * half_pi
    y = math.fmod(x, period)
    if y < 0.0:
        y += period
    if y >= period:  # rounding of the addition above
        y = 0.0
    quadrant = min(3, int(y / half_pi))
    if quadrant == 0:
        r = y
    elif quadrant == 1:
        r = 2.0 * half_pi - y
    elif quadrant == 2:
        r = y - 2.0 * half_pi
    else:
        r = 4.0 * half_pi - y
    r = min(max(r, 0.0), half_pi)
    return quadrant, r, half_pi


_CLAMP_THRESHOLD = -1e-15


def fractional_power(base: float, exponent: float) -> float:
    """base**exponent for bases that are nonnegative up to rounding.

    Quadrant-boundary roundoff can push a mathematically vanishing cosine a
    few ulps negative; such bases clamp to zero.  Anything below the clamp
    threshold is a genuine domain violation and raises.
    """
    if base < 0.0:
        if base < _CLAMP_THRESHOLD:
            raise DomainError(
                f"fractional power base {base!r} below clamp threshold"
            )
        base = 0.0
    return base**exponent


def _cos_magnitude(pp: ParamPair, s: float, one_minus_s: float) -> float:
    """(1 - s**q)**(1/p) with the base formed cancellation-free from 1 - s."""
    if s <= 0.5:
        base = 1.0 - s**pp.q
    else:
        base = -math.expm1(pp.q * math.log1p(-one_minus_s))
    return fractional_power(base, 1.0 / pp.p)


def sin_pq(pp: ParamPair, x: float, config: EvalConfig = DEFAULT_CONFIG) -> FunctionValue:
    """The generalized sine at any real x."""
    quadrant, r, half_pi = _reduce(pp, x, config)
    s, _ = _solve_reduced(pp, r, half_pi, config)
    value = s if quadrant < 2 else -s
    if value == 0.0:
        value = 0.0  # never report -0.0
    return FunctionValue(value, quadrant, r)


def cos_pq(pp: ParamPair, x: float, config: EvalConfig = DEFAULT_CONFIG) -> FunctionValue:
    """The generalized cosine, d/dx of the extended sine.

    The magnitude comes from |cos|**p = 1 - |sin|**q; the sign is that of the
    extended sine's slope: positive on quadrants 0 and 3, negative on 1 and 2.
    At the quarter period the value is +0.0.
    """
    quadrant, r, half_pi = _reduce(pp, x, config)
    s, one_minus_s = _solve_reduced(pp, r, half_pi, config)
    magnitude = _cos_magnitude(pp, s, one_minus_s)
    value = magnitude if quadrant in (0, 3) else -magnitude
    if value == 0.0:
        value = 0.0  # +0.0 at the quarter period regardless of quadrant sign
    return FunctionValue(value, quadrant, r)


def sin_cos(
    pp: ParamPair, x: float, config: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """Both function values from a single inversion (identity sweeps hit this)."""
    quadrant, r, half_pi = _reduce(pp, x, config)
    s, one_minus_s = _solve_reduced(pp, r, half_pi, config)
    sv = s if quadrant < 2 else -s
    magnitude = _cos_magnitude(pp, s, one_minus_s)
    cv = magnitude if quadrant in (0, 3) else -magnitude
    # fold -0.0 to +0.0, matching sin_pq / cos_pq
    return (sv if sv != 0.0 else 0.0, cv if cv != 0.0 else 0.0)


def arcsin_pq(pp: ParamPair, s: float, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """F(s) for s in [0, 1]: the inverse of the sine on its principal branch."""
    if not (isinstance(s, (int, float)) and math.isfinite(s) and 0.0 <= s <= 1.0):
        raise DomainError(f"arcsin_pq requires s in [0, 1], got {s!r}")
    if s == 1.0:
        return 0.5 * pi_pq(pp, config)
    return _arc_integral(pp.p, pp.q, float(s), config.quad_tol)


def ode_residual(
    pp: ParamPair, x: float, h: float = 1e-4, config: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Pointwise residual of the p-Laplacian oscillator equation.

    With u = sin_pq and u' = cos_pq, the extended sine satisfies
    -(|u'|**(p-2) u')' = ((p-1) q / p) |u|**(q-2) u.  This returns the central
    difference approximation of (|u'|**(p-2) u')' plus the right-hand side;
    the result is O(h**2) on the interior of the first quarter period.

    The argument must stay at least 10 h away from 0 and pi_pq/2, where
    |u'|**(p-2) degenerates for p < 2 (and |u|**(q-2) for q < 2).
    """
    if not (math.isfinite(h) and h > 0.0):
        raise DomainError(f"h must be positive, got {h!r}")
    half_pi = 0.5 * pi_pq(pp, config)
    margin = 10.0 * h
    if not (margin < x < half_pi - margin):
        raise DomainError(
            f"x={x!r} outside safe interval ({margin!r}, {half_pi - margin!r})"
        )
    p, q = pp.p, pp.q

    def flux(t: float) -> float:
        c = cos_pq(pp, t, config).value
        return abs(c) ** (p - 2.0) * c

    u = sin_pq(pp, x, config).value
    dflux = (flux(x + h) - flux(x - h)) / (2.0 * h)
    return dflux + (p - 1.0) * q / p * abs(u) ** (q - 2.0) * u
