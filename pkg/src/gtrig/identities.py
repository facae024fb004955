"""Catalog of the function identities and a sweep-based verification engine.

Every entry pairs evaluable left/right sides with the x-interval on which the
identity is claimed, so a sweep can report the maximum absolute deviation.
The vocabulary of identity ids is stable public API:

========================  =====================================================
id                        statement (s, c are sin/cos for the pair in question)
========================  =====================================================
pythagorean               |c|**p + |s|**q = 1 on all of R (any pair)
dbl-2-2                   sin 2x = 2 s c                                  (2,2)
dbl-2-4                   sin 2x = 2 s c / (1 + s**4)                     (2,4)
dbl-3:2-3                 sin 2x = s (1 + c**(3/2)) / (c**(1/2) (1+s**3)) (3/2,3)
dbl-4:3-4                 sin 2x = 2 s c**(1/3) / sqrt(1 + 4 s**4 c**(4/3)) (4/3,4)
dbl-2-3                   sin 2x = 4 s c (3+c)**3 / ((1+c)(8+s**3)**2)    (2,3)
dbl-4:3-2                 sin 2x = 4 s c**(1/3)(1+c**(4/3)) / (2c**(2/3)+s**2)**2 (4/3,2)
maf-sin                   sin_{2,p}(2**(2/p) x) = 2**(2/p) s c**(p*-1)  (pair (p*,p))
maf-cos                   cos_{2,p}(2**(2/p) x) = c**p* - s**p = 1 - 2 s**p
                          = 2 c**p* - 1 (chained, three comparisons)
half-sin                  s = ((1 - cos_{2,p}(2**(2/p) x)) / 2)**(1/p)
half-cos                  c = ((1 + cos_{2,p}(2**(2/p) x)) / 2)**(1/p*)
duality-pi                q pi_{p,q} = p* pi_{q*,p*}
duality-sin               sin_{p,q}(pi_{p,q} x / 2) = cos_{q*,p*}^{q*-1}(pi_{q*,p*}(1-x)/2)
lemniscate-add            two-argument addition formula of the (2,4) sine
proof-xtoy                sin_{2,3}(2**(2/3) 2y) = 2**(2/3) sin_{3/2,3}(2y) cos_{3/2,3}^{1/2}(2y)
proof-sin2x               sin_{4/3,2} 2x = sqrt(1 - sin_{2,4}^4(pi_{2,4}/2 - x))
proof-f2x                 f(2x) = 2 g(x) / (1 + g(x)**2), f = sin_{4/3,2}, g = sin_{2,4}
proof-gx                  g(x) = 2 g(x/2) sqrt(1 - g(x/2)**4) / (1 + g(x/2)**4)
proof-sum-diff            1/g**2 + g**2 = 4/f(2x)**2 - 2  and
                          1/g**2 - g**2 = (4/f(2x)) sqrt(1/f(2x)**2 - 1)
========================  =====================================================

Parameterized entries (maf-*, half-*, duality-*, pythagorean) are verified
over the configurable panels below.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError, UnknownIdentityError
from .functions import (
    DEFAULT_CONFIG,
    EvalConfig,
    ParamPair,
    fractional_power,
    pi_pq,
    sin_cos,
    sin_pq,
)

__all__ = [
    "IdentitySpec",
    "IdentityReport",
    "P_PANEL",
    "PQ_PANEL",
    "identity_ids",
    "identity_specs",
    "eval_identity",
    "verify",
    "dbl_angle_2_3",
    "dbl_angle_43_2",
]

# Verification panels for the parameter-indexed identities (configuration,
# not baked into the catalog functions).
P_PANEL: tuple[float, ...] = (1.5, 2.0, 3.0, 4.0, 7.5)
PQ_PANEL: tuple[tuple[float, float], ...] = (
    (2.0, 3.0),
    (3.0, 2.0),
    (4.0 / 3.0, 2.0),
    (2.0, 4.0),
    (1.5, 3.0),
    (4.0 / 3.0, 4.0),
    (5.0, 5.0),
)

_TWO_ARG_GRID = 32  # per-axis uniform grid for two-argument identities


@dataclass(frozen=True)
class IdentitySpec:
    """One catalog entry: an id, fixed parameters, a validity interval, and
    the evaluator pairs to compare (more than one pair for chained
    equalities)."""

    identity_id: str
    params: Optional[ParamPair]
    domain: tuple[float, float]
    comparisons: tuple[tuple[Callable, Callable], ...]
    arity: int = 1
    closed_lo: bool = True
    closed_hi: bool = True
    inset: float = 1e-12  # relative inset applied at any open endpoint

    @property
    def lhs(self) -> Callable:
        return self.comparisons[0][0]

    @property
    def rhs(self) -> Callable:
        return self.comparisons[0][1]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of sweeping one identity over its domain."""

    identity_id: str
    samples: int
    max_abs_err: float
    argmax_x: float
    tol: float
    passed: bool
    elapsed: float
    argmax_y: Optional[float] = None
    rel_err: Optional[float] = None  # informational, when |lhs| > 1e-3 at argmax
    note: Optional[str] = None


def dbl_angle_2_3(
    x: float, config: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """Both sides of the (2,3) double-angle formula on [0, pi_{2,3}/2].

    sin 2x = 4 s c (3 + c)**3 / ((1 + c)(8 + s**3)**2).  The denominator is
    bounded below by 64 on the domain, so there is nothing singular to dodge.
    """
    pp = ParamPair(2.0, 3.0)
    half_pi = 0.5 * pi_pq(pp, config)
    if not 0.0 <= x <= half_pi:
        raise DomainError(f"x={x!r} outside [0, {half_pi!r}]")
    s, c = sin_cos(pp, x, config)
    lhs = sin_pq(pp, 2.0 * x, config).value
    rhs = 4.0 * s * c * (3.0 + c) ** 3 / ((1.0 + c) * (8.0 + s**3) ** 2)
    return lhs, rhs


def dbl_angle_43_2(
    x: float, config: EvalConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """Both sides of the (4/3,2) double-angle formula on [0, pi_{4/3,2}/2].

    sin 2x = 4 s c**(1/3) (1 + c**(4/3)) / (2 c**(2/3) + s**2)**2.  At the
    right endpoint c = 0 and s = 1, so the quotient is 0/1 and matches the
    vanishing left side.
    """
    pp = ParamPair(4.0 / 3.0, 2.0)
    half_pi = 0.5 * pi_pq(pp, config)
    if not 0.0 <= x <= half_pi:
        raise DomainError(f"x={x!r} outside [0, {half_pi!r}]")
    s, c = sin_cos(pp, x, config)
    lhs = sin_pq(pp, 2.0 * x, config).value
    rhs = (
        4.0
        * s
        * fractional_power(c, 1.0 / 3.0)
        * (1.0 + fractional_power(c, 4.0 / 3.0))
        / (2.0 * fractional_power(c, 2.0 / 3.0) + s**2) ** 2
    )
    return lhs, rhs


# --------------------------------------------------------------------------
# catalog builders


def _pythagorean(pp: ParamPair, config: EvalConfig) -> IdentitySpec:
    span = 3.0 * pi_pq(pp, config)

    def lhs(x: float) -> float:
        s, c = sin_cos(pp, x, config)
        return abs(c) ** pp.p + abs(s) ** pp.q

    return IdentitySpec("pythagorean", pp, (-span, span), ((lhs, lambda x: 1.0),))


def _dbl_2_2(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(2.0, 2.0)

    def lhs(x: float) -> float:
        return sin_pq(pp, 2.0 * x, config).value

    def rhs(x: float) -> float:
        s, c = sin_cos(pp, x, config)
        return 2.0 * s * c

    return IdentitySpec("dbl-2-2", pp, (-10.0, 10.0), ((lhs, rhs),))


def _dbl_2_4(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(2.0, 4.0)
    span = 2.0 * pi_pq(pp, config)

    def lhs(x: float) -> float:
        return sin_pq(pp, 2.0 * x, config).value

    def rhs(x: float) -> float:
        s, c = sin_cos(pp, x, config)
        return 2.0 * s * c / (1.0 + s**4)

    return IdentitySpec("dbl-2-4", pp, (-span, span), ((lhs, rhs),))


def _dbl_32_3(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(1.5, 3.0)
    quarter = 0.25 * pi_pq(pp, config)

    def lhs(x: float) -> float:
        return sin_pq(pp, 2.0 * x, config).value

    def rhs(x: float) -> float:
        s, c = sin_cos(pp, x, config)
        return (
            s
            * (1.0 + fractional_power(c, 1.5))
            / (fractional_power(c, 0.5) * (1.0 + s**3))
        )

    return IdentitySpec("dbl-3:2-3", pp, (0.0, quarter), ((lhs, rhs),))


def _dbl_43_4(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(4.0 / 3.0, 4.0)
    quarter = 0.25 * pi_pq(pp, config)

    def lhs(x: float) -> float:
        return sin_pq(pp, 2.0 * x, config).value

    def rhs(x: float) -> float:
        s, c = sin_cos(pp, x, config)
        return (
            2.0
            * s
            * fractional_power(c, 1.0 / 3.0)
            / math.sqrt(1.0 + 4.0 * s**4 * fractional_power(c, 4.0 / 3.0))
        )

    return IdentitySpec("dbl-4:3-4", pp, (0.0, quarter), ((lhs, rhs),))


def _dbl_2_3(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(2.0, 3.0)
    half = 0.5 * pi_pq(pp, config)
    return IdentitySpec(
        "dbl-2-3",
        pp,
        (0.0, half),
        (
            (
                lambda x: dbl_angle_2_3(x, config)[0],
                lambda x: dbl_angle_2_3(x, config)[1],
            ),
        ),
    )


def _dbl_43_2(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(4.0 / 3.0, 2.0)
    half = 0.5 * pi_pq(pp, config)
    return IdentitySpec(
        "dbl-4:3-2",
        pp,
        (0.0, half),
        (
            (
                lambda x: dbl_angle_43_2(x, config)[0],
                lambda x: dbl_angle_43_2(x, config)[1],
            ),
        ),
    )


def _maf_pairs(p: float) -> tuple[ParamPair, ParamPair, float]:
    """Inner (p*, p) pair, outer (2, p) pair, and the 2**(2/p) scale factor
    linking them in the multiple-angle relations."""
    pstar = p / (p - 1.0)
    return ParamPair(pstar, p), ParamPair(2.0, p), 2.0 ** (2.0 / p)


def _maf_sin(p: float, config: EvalConfig) -> IdentitySpec:
    inner, outer, k = _maf_pairs(p)
    half = 0.5 * pi_pq(inner, config)
    pstar = inner.p

    def lhs(x: float) -> float:
        return sin_pq(outer, k * x, config).value

    def rhs(x: float) -> float:
        s, c = sin_cos(inner, x, config)
        return k * s * fractional_power(c, pstar - 1.0)

    return IdentitySpec("maf-sin", inner, (0.0, half), ((lhs, rhs),))


def _maf_cos(p: float, config: EvalConfig) -> IdentitySpec:
    inner, outer, k = _maf_pairs(p)
    half = 0.5 * pi_pq(inner, config)
    pstar = inner.p

    def outer_cos(x: float) -> float:
        _, c = sin_cos(outer, k * x, config)
        return c

    def diff_form(x: float) -> float:
        s, c = sin_cos(inner, x, config)
        return fractional_power(c, pstar) - fractional_power(s, p)

    def sin_form(x: float) -> float:
        s, _ = sin_cos(inner, x, config)
        return 1.0 - 2.0 * fractional_power(s, p)

    def cos_form(x: float) -> float:
        _, c = sin_cos(inner, x, config)
        return 2.0 * fractional_power(c, pstar) - 1.0

    return IdentitySpec(
        "maf-cos",
        inner,
        (0.0, half),
        ((outer_cos, diff_form), (diff_form, sin_form), (sin_form, cos_form)),
    )


def _half_sin(p: float, config: EvalConfig) -> IdentitySpec:
    inner, outer, k = _maf_pairs(p)
    half = 0.5 * pi_pq(inner, config)

    def lhs(x: float) -> float:
        s, _ = sin_cos(inner, x, config)
        return s

    def rhs(x: float) -> float:
        s2, c2 = sin_cos(outer, k * x, config)
        if c2 > 0.5:
            # same quantity as (1 - c2), written through |c|**2 = 1 - s**p so
            # it stays accurate where c2 is within an ulp of 1
            u = -math.expm1(0.5 * math.log1p(-fractional_power(s2, p)))
        else:
            u = 1.0 - c2
        return fractional_power(0.5 * u, 1.0 / p)

    return IdentitySpec("half-sin", inner, (0.0, half), ((lhs, rhs),))


def _half_cos(p: float, config: EvalConfig) -> IdentitySpec:
    inner, outer, k = _maf_pairs(p)
    half = 0.5 * pi_pq(inner, config)
    pstar = inner.p

    def lhs(x: float) -> float:
        _, c = sin_cos(inner, x, config)
        return c

    def rhs(x: float) -> float:
        s2, c2 = sin_cos(outer, k * x, config)
        if c2 < -0.5:
            # 1 + c2 with c2 = -(1 - s2**p)**(1/2), cancellation-free
            u = -math.expm1(0.5 * math.log1p(-fractional_power(s2, p)))
        else:
            u = 1.0 + c2
        return fractional_power(0.5 * u, 1.0 / pstar)

    # x and 2**(2/p) x cannot both be float-exact at the quarter period, and
    # for p < 2 both sides behave like (half - x)**(p-1) there, so the ulp of
    # argument coupling inflates sublinearly; stay a hair inside the endpoint.
    return IdentitySpec(
        "half-cos", inner, (0.0, half), ((lhs, rhs),), closed_hi=False, inset=1e-9
    )


def _duality_pi(pp: ParamPair, config: EvalConfig) -> IdentitySpec:
    dual = pp.dual()
    lhs_value = pp.q * pi_pq(pp, config)
    rhs_value = pp.p_star * pi_pq(dual, config)
    return IdentitySpec(
        "duality-pi",
        pp,
        (0.0, 1.0),
        ((lambda x: lhs_value, lambda x: rhs_value),),
    )


def _duality_sin(pp: ParamPair, config: EvalConfig) -> IdentitySpec:
    dual = pp.dual()
    half = 0.5 * pi_pq(pp, config)
    half_dual = 0.5 * pi_pq(dual, config)
    expo = pp.q_star - 1.0

    def lhs(x: float) -> float:
        return sin_pq(pp, half * x, config).value

    def rhs(x: float) -> float:
        _, c = sin_cos(dual, half_dual * (1.0 - x), config)
        return fractional_power(c, expo)

    return IdentitySpec("duality-sin", pp, (0.0, 2.0), ((lhs, rhs),))


def _lemniscate_add(config: EvalConfig) -> IdentitySpec:
    pp = ParamPair(2.0, 4.0)
    half = 0.5 * pi_pq(pp, config)

    def lhs(u: float, v: float) -> float:
        return sin_pq(pp, u + v, config).value

    def rhs(u: float, v: float) -> float:
        su, cu = sin_cos(pp, u, config)
        sv, cv = sin_cos(pp, v, config)
        return (su * cv + cu * sv) / (1.0 + su**2 * sv**2)

    return IdentitySpec("lemniscate-add", pp, (0.0, half), ((lhs, rhs),), arity=2)


def _proof_xtoy(config: EvalConfig) -> IdentitySpec:
    pp23 = ParamPair(2.0, 3.0)
    pp323 = ParamPair(1.5, 3.0)
    quarter = 0.25 * pi_pq(pp323, config)
    k = 2.0 ** (2.0 / 3.0)

    def lhs(y: float) -> float:
        return sin_pq(pp23, k * 2.0 * y, config).value

    def rhs(y: float) -> float:
        s, c = sin_cos(pp323, 2.0 * y, config)
        return k * s * fractional_power(c, 0.5)

    return IdentitySpec("proof-xtoy", pp23, (0.0, quarter), ((lhs, rhs),))


def _proof_sin2x(config: EvalConfig) -> IdentitySpec:
    pp432 = ParamPair(4.0 / 3.0, 2.0)
    pp24 = ParamPair(2.0, 4.0)
    pi24 = pi_pq(pp24, config)

    def lhs(x: float) -> float:
        return sin_pq(pp432, 2.0 * x, config).value

    def rhs(x: float) -> float:
        s = sin_pq(pp24, 0.5 * pi24 - x, config).value
        return fractional_power(1.0 - s**4, 0.5)

    return IdentitySpec("proof-sin2x", pp432, (0.0, pi24), ((lhs, rhs),))


def _proof_f2x(config: EvalConfig) -> IdentitySpec:
    pp432 = ParamPair(4.0 / 3.0, 2.0)
    pp24 = ParamPair(2.0, 4.0)
    pi24 = pi_pq(pp24, config)

    def lhs(x: float) -> float:
        return sin_pq(pp432, 2.0 * x, config).value

    def rhs(x: float) -> float:
        g = sin_pq(pp24, x, config).value
        return 2.0 * g / (1.0 + g**2)

    return IdentitySpec(
        "proof-f2x",
        pp432,
        (0.0, pi24),
        ((lhs, rhs),),
        closed_lo=False,
        closed_hi=False,
    )


def _proof_gx(config: EvalConfig) -> IdentitySpec:
    pp24 = ParamPair(2.0, 4.0)
    half = 0.5 * pi_pq(pp24, config)

    def lhs(x: float) -> float:
        return sin_pq(pp24, x, config).value

    def rhs(x: float) -> float:
        gh = sin_pq(pp24, 0.5 * x, config).value
        return 2.0 * gh * fractional_power(1.0 - gh**4, 0.5) / (1.0 + gh**4)

    return IdentitySpec("proof-gx", pp24, (0.0, half), ((lhs, rhs),))


def _proof_sum_diff(config: EvalConfig) -> IdentitySpec:
    pp432 = ParamPair(4.0 / 3.0, 2.0)
    pp24 = ParamPair(2.0, 4.0)
    half = 0.5 * pi_pq(pp24, config)

    def plus_lhs(x: float) -> float:
        g = sin_pq(pp24, x, config).value
        return 1.0 / g**2 + g**2

    def plus_rhs(x: float) -> float:
        f = sin_pq(pp432, 2.0 * x, config).value
        return 4.0 / f**2 - 2.0

    def minus_lhs(x: float) -> float:
        g = sin_pq(pp24, x, config).value
        return 1.0 / g**2 - g**2

    def minus_rhs(x: float) -> float:
        f = sin_pq(pp432, 2.0 * x, config).value
        return 4.0 / f * fractional_power(1.0 / f**2 - 1.0, 0.5)

    # Both sides grow like x**-2 toward 0, and the difference form has an
    # infinite f-derivative where f(2x) -> 1 at the other end, so float
    # evaluation cannot support an absolute comparison arbitrarily close to
    # either endpoint; the inset keeps roundoff amplification under ~1e-12.
    return IdentitySpec(
        "proof-sum-diff",
        pp432,
        (0.0, half),
        ((plus_lhs, plus_rhs), (minus_lhs, minus_rhs)),
        closed_lo=False,
        closed_hi=False,
        inset=2e-2,
    )


_PARAM_P_IDS = ("maf-sin", "maf-cos", "half-sin", "half-cos")
_PARAM_PQ_IDS = ("pythagorean", "duality-pi", "duality-sin")

_IDENTITY_IDS = (
    "pythagorean",
    "dbl-2-2",
    "dbl-2-4",
    "dbl-3:2-3",
    "dbl-4:3-4",
    "dbl-2-3",
    "dbl-4:3-2",
    "maf-sin",
    "maf-cos",
    "half-sin",
    "half-cos",
    "duality-pi",
    "duality-sin",
    "lemniscate-add",
    "proof-xtoy",
    "proof-sin2x",
    "proof-f2x",
    "proof-gx",
    "proof-sum-diff",
)

_FIXED_BUILDERS = {
    "dbl-2-2": _dbl_2_2,
    "dbl-2-4": _dbl_2_4,
    "dbl-3:2-3": _dbl_32_3,
    "dbl-4:3-4": _dbl_43_4,
    "dbl-2-3": _dbl_2_3,
    "dbl-4:3-2": _dbl_43_2,
    "lemniscate-add": _lemniscate_add,
    "proof-xtoy": _proof_xtoy,
    "proof-sin2x": _proof_sin2x,
    "proof-f2x": _proof_f2x,
    "proof-gx": _proof_gx,
    "proof-sum-diff": _proof_sum_diff,
}

_P_BUILDERS = {
    "maf-sin": _maf_sin,
    "maf-cos": _maf_cos,
    "half-sin": _half_sin,
    "half-cos": _half_cos,
}

_PQ_BUILDERS = {
    "pythagorean": _pythagorean,
    "duality-pi": _duality_pi,
    "duality-sin": _duality_sin,
}


def identity_ids() -> tuple[str, ...]:
    """The catalog vocabulary, in catalog order."""
    return _IDENTITY_IDS


def identity_specs(
    identity_id: str,
    *,
    p: Optional[float] = None,
    pp: Optional[ParamPair] = None,
    p_panel: Sequence[float] = P_PANEL,
    pq_panel: Sequence[tuple[float, float]] = PQ_PANEL,
    config: EvalConfig = DEFAULT_CONFIG,
) -> tuple[IdentitySpec, ...]:
    """Instantiate the specs behind an id.

    Parameterized identities expand over the panel unless an explicit ``p``
    (for the exponent-indexed families) or ``pp`` (for the pair-indexed ones)
    pins a single instance.
    """
    if identity_id in _FIXED_BUILDERS:
        return (_FIXED_BUILDERS[identity_id](config),)
    if identity_id in _P_BUILDERS:
        build = _P_BUILDERS[identity_id]
        if p is not None:
            return (build(float(p), config),)
        return tuple(build(float(v), config) for v in p_panel)
    if identity_id in _PQ_BUILDERS:
        build = _PQ_BUILDERS[identity_id]
        if pp is not None:
            return (build(pp, config),)
        return tuple(build(ParamPair(a, b), config) for a, b in pq_panel)
    raise UnknownIdentityError(identity_id)


def eval_identity(
    identity_id: str,
    x: float,
    y: Optional[float] = None,
    *,
    p: Optional[float] = None,
    pp: Optional[ParamPair] = None,
    config: EvalConfig = DEFAULT_CONFIG,
) -> tuple[float, float]:
    """Evaluate both sides of one identity at a point.

    For parameterized identities the instance defaults to p = 3 (exponent
    families) or the pair (2, 3); pass ``p`` or ``pp`` to choose another.
    """
    if identity_id not in _IDENTITY_IDS:
        raise UnknownIdentityError(identity_id)
    if identity_id in _P_BUILDERS and p is None:
        p = 3.0
    if identity_id in _PQ_BUILDERS and pp is None:
        pp = ParamPair(2.0, 3.0)
    spec = identity_specs(identity_id, p=p, pp=pp, config=config)[0]

    lo, hi = spec.domain
    args: tuple[float, ...]
    if spec.arity == 2:
        if y is None:
            raise DomainError(f"{identity_id} takes two arguments")
        if not (lo <= x <= hi and lo <= y <= hi and x + y <= hi):
            raise DomainError(f"({x!r}, {y!r}) outside the two-argument domain")
        args = (x, y)
    else:
        if y is not None:
            raise DomainError(f"{identity_id} takes a single argument")
        inside = (lo < x if not spec.closed_lo else lo <= x) and (
            x < hi if not spec.closed_hi else x <= hi
        )
        if not inside:
            raise DomainError(f"x={x!r} outside domain ({lo!r}, {hi!r})")
        args = (x,)
    return float(spec.lhs(*args)), float(spec.rhs(*args))


def _sample_points(spec: IdentitySpec, samples: int, seed: int) -> np.ndarray:
    lo, hi = spec.domain
    width = hi - lo
    lo_eff = lo if spec.closed_lo else lo + spec.inset * width
    hi_eff = hi if spec.closed_hi else hi - spec.inset * width
    rng = np.random.default_rng(seed)
    if spec.arity == 1:
        grid = np.linspace(lo_eff, hi_eff, samples)
        rand = rng.uniform(lo_eff, hi_eff, samples)
        return np.concatenate([grid, rand])[:, None]
    # two arguments: uniform grid plus random pairs, filtered so the sum stays
    # inside the domain of the left side
    axis = np.linspace(lo_eff, hi_eff, _TWO_ARG_GRID)
    uu, vv = np.meshgrid(axis, axis)
    pts = np.column_stack([uu.ravel(), vv.ravel()])
    ru = rng.uniform(lo_eff, hi_eff, samples)
    rv = rng.uniform(lo_eff, hi_eff, samples)
    pts = np.vstack([pts, np.column_stack([ru, rv])])
    return pts[pts.sum(axis=1) <= hi_eff]


def _sweep(
    spec: IdentitySpec,
    samples: int,
    seed: int,
    rhs_offset: float,
) -> tuple[int, float, float, Optional[float], float, Optional[str]]:
    """Evaluate every comparison at every sample point.

    Returns (count, max_err, argmax_x, argmax_y, lhs_at_argmax, note).  The
    running maximum is reduced lexicographically on (err, x) so the result
    does not depend on evaluation order.
    """
    points = _sample_points(spec, samples, seed)
    best_err = -math.inf
    best_x = math.nan
    best_y: Optional[float] = None
    best_lhs = math.nan
    note: Optional[str] = None
    for row in points:
        args = tuple(float(v) for v in row)
        cache: dict[int, float] = {}
        err = 0.0
        lhs_val = math.nan
        finite = True
        for k, (lf, rf) in enumerate(spec.comparisons):
            lv = cache.get(id(lf))
            if lv is None:
                lv = float(lf(*args))
                cache[id(lf)] = lv
            rv = cache.get(id(rf))
            if rv is None:
                rv = float(rf(*args))
                cache[id(rf)] = rv
            rv = rv + rhs_offset
            if k == 0:
                lhs_val = lv
            if not (math.isfinite(lv) and math.isfinite(rv)):
                finite = False
                break
            err = max(err, abs(lv - rv))
        if not finite:
            if note is None:
                note = f"non-finite value at {args!r}"
            best_err, best_x, best_lhs = math.inf, args[0], math.nan
            best_y = args[1] if spec.arity == 2 else None
            continue
        if err > best_err or (err == best_err and args[0] > best_x):
            best_err = err
            best_x = args[0]
            best_y = args[1] if spec.arity == 2 else None
            best_lhs = lhs_val
    return len(points), best_err, best_x, best_y, best_lhs, note


def verify(
    identity_id: str,
    samples: int = 1000,
    tol: float = 1e-9,
    seed: int = 0,
    *,
    rhs_offset: float = 0.0,
    p_panel: Sequence[float] = P_PANEL,
    pq_panel: Sequence[tuple[float, float]] = PQ_PANEL,
    config: EvalConfig = DEFAULT_CONFIG,
) -> IdentityReport:
    """Sweep an identity over a uniform grid plus seeded random points and
    report the worst absolute deviation.

    Parameterized identities sweep every panel instance and aggregate.
    ``rhs_offset`` perturbs every right side by a constant; it exists so the
    engine's sensitivity is itself testable.
    """
    if samples < 2:
        raise DomainError(f"samples must be at least 2, got {samples}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    specs = identity_specs(
        identity_id, p_panel=p_panel, pq_panel=pq_panel, config=config
    )
    start = time.perf_counter()
    total = 0
    best_err = -math.inf
    best_x = math.nan
    best_y: Optional[float] = None
    best_lhs = math.nan
    note: Optional[str] = None
    for spec in specs:
        count, err, x, yv, lhs_val, spec_note = _sweep(spec, samples, seed, rhs_offset)
        total += count
        if spec_note is not None and note is None:
            note = spec_note
        if err > best_err or (err == best_err and x > best_x):
            best_err, best_x, best_y, best_lhs = err, x, yv, lhs_val
    elapsed = time.perf_counter() - start
    passed = math.isfinite(best_err) and best_err <= tol and note is None
    rel = (
        best_err / abs(best_lhs)
        if math.isfinite(best_err) and math.isfinite(best_lhs) and abs(best_lhs) > 1e-3
        else None
    )
    return IdentityReport(
        identity_id=identity_id,
        samples=total,
        max_abs_err=best_err,
        argmax_x=best_x,
        tol=tol,
        passed=passed,
        elapsed=elapsed,
        argmax_y=best_y,
        rel_err=rel,
        note=note,
    )
