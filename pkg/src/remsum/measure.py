"""Exact measures of bounded-complete-quotient sets and the finite-n bound
verifications behind the almost-everywhere estimates of |B_n(t)|."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import cfrac, sums
from .errors import BoundViolated, NotMember, TooLarge
from .exactnum import QuadExt, Scalar

_ENUM_GUARD = 10 ** 7


@dataclass
class MeasureSet:
    """{t in (0,1)\\Q : theta_j(t) < alpha_j for j <= m} with its exact
    Lebesgue measure and the a-priori product bounds."""

    alphas: tuple[int, ...]
    exact_measure: Fraction
    lower_bound: Fraction
    upper_bound: Fraction

    def __post_init__(self):
        assert self.lower_bound <= self.exact_measure <= self.upper_bound


def measure_exact(alphas) -> MeasureSet:
    """Exact measure by enumerating the fundamental intervals J(l1,...,lm)."""
    al = tuple(int(a) for a in alphas)
    if not al or any(a < 1 for a in al):
        raise ValueError("alphas must be positive integers")
    lower = math.prod((Fraction(a - 1, a) ** 2 for a in al), start=Fraction(1))
    upper = math.prod((Fraction(a - 1, a) for a in al), start=Fraction(1))
    size = math.prod(max(a - 1, 0) for a in al)
    if size > _ENUM_GUARD:
        raise TooLarge(f"{size} fundamental intervals exceed the guard")
    total = Fraction(0)
    if size:
        for lams in product(*(range(1, a) for a in al)):
            total += cfrac.fundamental_interval(lams)[2]
    return MeasureSet(al, total, lower, upper)


def mn_threshold(n: int, theta_of_n) -> tuple[int, int]:
    """(m, cutoff) = (floor(4 log n), 1 + floor(theta(n) log n)), natural log."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if not theta_of_n >= 1:
        raise ValueError("theta must be >= 1")
    logn = math.log(n)
    return int(4 * logn), 1 + int(float(theta_of_n) * logn)


def _sample_cf(cutoff: int, m: int, seed: int) -> tuple[Scalar, cfrac.CFExpansion]:
    if cutoff < 2:
        raise ValueError("cutoff must be >= 2")
    rng = random.Random(seed)
    length = max(m, 8)
    coeffs = tuple(rng.randint(1, cutoff - 1) for _ in range(length))
    cf = cfrac.CFExpansion(0, (), coeffs)
    return cfrac.value(cf), cf


def sample_bounded_cf(cutoff: int, m: int, seed: int) -> Scalar:
    """A quadratic irrational in (0,1) whose expansion is purely periodic with
    all partial quotients in [1, cutoff-1] and period length >= m."""
    t, cf = _sample_cf(cutoff, m, seed)
    # re-verify membership through the exact complete quotients
    for j, th in enumerate(cfrac.theta_sequence(t, min(max(m, 1), 2 * len(cf.period))), 1):
        assert th < cutoff, f"theta_{j} >= cutoff for sampled t"
    return t


def verify_b0_mass(n: int, theta_of_n, samples: int, seed: int) -> dict:
    """Draw members of the bounded-quotient set for this n and check
    |B_n(t)| <= 2 log^2(n) theta(n) / n exactly on every sample."""
    m, cutoff = mn_threshold(n, theta_of_n)
    bound_s = 2 * math.log(n) ** 2 * float(theta_of_n)  # bound for |S(n,t)|
    bound_frac = Fraction(bound_s)
    max_ratio = 0.0
    for i in range(samples):
        t, cf = _sample_cf(cutoff, m, seed + i)
        s_val = sums.ostrowski_S(n, t, cf)[0]
        if abs(s_val) > bound_frac:
            raise BoundViolated(f"witness t = {t}")
        max_ratio = max(max_ratio, abs(float(s_val)) / bound_s)
    return {"n": n, "theta": float(theta_of_n), "samples": samples,
            "max_ratio": max_ratio, "pass": True}


def verify_ae_bound(n: int, epsilon, theta_of_n, t: Scalar,
                    cf: cfrac.CFExpansion | None = None) -> dict:
    """Check |B_n(t)| <= (4 log n)^(2+eps) theta(n) / (2n) for t whose partial
    quotients satisfy lambda_j <= theta(n) * j^(1+eps) up to the reachable depth."""
    if cf is None:
        cf = cfrac.expand(t, 64)
    eps = float(epsilon)
    theta = float(theta_of_n)
    m = int(4 * math.log(n)) + 1
    for j in range(1, m + 1):
        if cf.coeff(j) > theta * j ** (1 + eps):
            raise NotMember(f"lambda_{j} = {cf.coeff(j)} too large")
    bound_s = (4 * math.log(n)) ** (2 + eps) * theta / 2  # bound for |S(n,t)|
    s_val = sums.ostrowski_S(n, t, cf)[0]
    if abs(s_val) > Fraction(bound_s):
        raise BoundViolated(f"witness t = {t}")
    ratio = abs(float(s_val)) / bound_s
    return {"n": n, "epsilon": eps, "theta": theta, "ratio": ratio, "pass": True}
