"""Sawtooth remainder sums S(n,t), their means B_n, and the fast recursions.

brute_S is the O(n) oracle.  ostrowski_S implements the classical O(log n)
recursion driven by the continued-fraction convergents of t; bseq_S is the
alternative recursion through the Gauss-map orbit of t.  All three agree
exactly on every input.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from . import cfrac
from .errors import DomainError, NotIrrational, NotNeighbors
from .exactnum import (HALF, QuadExt, Scalar, as_fraction, beta, beta0, floor,
                       is_rational)


@dataclass
class OstrowskiStep:
    j_star: int
    n_before: int
    n_after: int
    rho: Scalar
    increment: Scalar


@dataclass
class BseqStep:
    j: int
    n_j: int
    t_j: Scalar
    term: Scalar


@dataclass
class SumTrace:
    """Audit record of one recursion run."""

    mode: str  # "ostrowski" | "bseq"
    steps: list = field(default_factory=list)
    total: Scalar = Fraction(0)

    def __len__(self):
        return len(self.steps)


# -- brute-force oracle ----------------------------------------------------


def brute_S(n: int, t: Scalar) -> Scalar:
    """Exact S(n,t) = sum of beta(k t) for k <= n.  O(n); the oracle."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if is_rational(t):
        fr = as_fraction(t)
        p, q = fr.numerator, fr.denominator
        r = 0
        tot = 0
        for _ in range(n):
            r = (r + p) % q
            tot += r
        return Fraction(tot, q) - Fraction(n, 2)
    total: Scalar = Fraction(0)
    kt = t
    for k in range(1, n + 1):
        total = total + (kt - floor(kt))
        kt = kt + t
    return total - Fraction(n, 2)


def brute_S0(n: int, t: Scalar) -> Scalar:
    """Exact sum of beta0(k t) for k <= n (midpoint convention at jumps)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if is_rational(t):
        fr = as_fraction(t)
        p, q = fr.numerator, fr.denominator
        r = 0
        tot = 0
        nonint = 0
        for _ in range(n):
            r = (r + p) % q
            tot += r
            if r:
                nonint += 1
        return Fraction(tot, q) - Fraction(nonint, 2)
    return brute_S(n, t)  # k*t is never an integer for irrational t


def s0_prefix(t: Scalar, n_max: int) -> list:
    """[S0(0,t), S0(1,t), ..., S0(n_max,t)] exactly, in one O(n_max) sweep."""
    out = [Fraction(0)]
    if is_rational(t):
        fr = as_fraction(t)
        p, q = fr.numerator, fr.denominator
        r = 0
        tot = 0
        nonint = 0
        for _ in range(n_max):
            r = (r + p) % q
            tot += r
            if r:
                nonint += 1
            out.append(Fraction(tot, q) - Fraction(nonint, 2))
        return out
    total: Scalar = Fraction(0)
    kt = t
    for k in range(1, n_max + 1):
        total = total + (kt - floor(kt) - HALF)
        kt = kt + t
        out.append(total)
    return out


# -- means and one-sided limits -------------------------------------------


def B(n: int, t: Scalar, method: str = "brute", cf=None) -> Scalar:
    """B_n(t) = S(n,t)/n.  method selects brute | ostrowski | bseq."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "brute":
        s = brute_S(n, t)
    elif method == "ostrowski":
        if cf is None:
            cf = cfrac.expand(t, 64)
        s = ostrowski_S(n, t, cf)[0]
    elif method == "bseq":
        s = bseq_S(n, t)[0]
    else:
        raise ValueError(f"unknown method {method!r}")
    return s / n


def B_left(n: int, a_over_b: Fraction) -> Scalar:
    """Left limit of B_n at the reduced fraction a/b (B_n itself is the
    right limit; the jump there is -(1/n) floor(n/b))."""
    ab = Fraction(a_over_b)
    return B(n, ab) + Fraction(n // ab.denominator, n)


def _B_real(x: Scalar, v: Scalar) -> Scalar:
    """B_x(v) with real index x: (1/x) * sum over k <= floor(x)."""
    if isinstance(x, int):
        x = Fraction(x)
    m = floor(x)
    if m < 1:
        return Fraction(0)
    return brute_S(m, v) / x


def _B_real_left(x: Scalar, v: Scalar) -> Scalar:
    """Left limit of B_x in the function argument, at real index x."""
    if isinstance(x, int):
        x = Fraction(x)
    if is_rational(v):
        bden = as_fraction(v).denominator
        return _B_real(x, v) + floor(x / bden) / x
    return _B_real(x, v)


# -- Ostrowski recursion ---------------------------------------------------


class OstrowskiTables:
    """Convergents a_k/b_k of t and the residues rho_k = |b_k t - a_k|,
    grown on demand.  Amortizes the expansion across an n-sweep."""

    def __init__(self, t: Scalar, cf: cfrac.CFExpansion):
        if is_rational(t) or cf.is_finite:
            raise NotIrrational("Ostrowski recursion needs irrational t")
        # consistency: the first partial quotients of t must match cf
        x = t
        for j in range(4):
            c = cf.lambda0 if j == 0 else cf.coeff(j)
            if floor(x) != c:
                raise ValueError("expansion does not match t")
            x = (x - c).reciprocal()
        self.t = t
        self.cf = cf
        self.a = [1, cf.lambda0]
        self.b = [0, 1]
        self.rho: list = [None, abs(t - cf.lambda0)]

    def extend_past(self, n: int):
        while self.b[-1] <= n:
            k = len(self.b) - 1
            lam = self.cf.coeff(k)
            self.a.append(self.a[-2] + lam * self.a[-1])
            self.b.append(self.b[-2] + lam * self.b[-1])
            self.rho.append(abs(self.b[-1] * self.t - self.a[-1]))

    def j_star(self, n: int) -> int:
        """The unique j with b_j <= n < b_{j+1} (rightmost on ties)."""
        self.extend_past(n)
        return bisect_right(self.b, n) - 1


def _ostrowski_step(tab: OstrowskiTables, n: int, validate: bool = True):
    j = tab.j_star(n)
    q, n2 = divmod(n, tab.b[j])
    rho = tab.rho[j]
    factor = 1 - rho * (n + n2 + 1)
    inc = Fraction((-1) ** j * q, 2) * factor
    if validate:
        if not (0 < abs(factor) < 1):
            raise AssertionError(f"Ostrowski side condition failed at n={n}")
        if q > tab.cf.coeff(j):
            raise AssertionError(f"floor(n/b_j*) > lambda_j* at n={n}")
    return j, q, n2, rho, inc


def ostrowski_S(n: int, t: Scalar, cf: cfrac.CFExpansion,
                tables: OstrowskiTables | None = None) -> tuple[Scalar, SumTrace]:
    """Exact S(n,t) for irrational t in O(log n) recursion steps."""
    if n < 0:
        raise ValueError("n must be >= 0")
    tab = tables if tables is not None else OstrowskiTables(t, cf)
    trace = SumTrace("ostrowski")
    total: Scalar = Fraction(0)
    while n > 0:
        j, q, n2, rho, inc = _ostrowski_step(tab, n)
        trace.steps.append(OstrowskiStep(j, n, n2, rho, inc))
        total = total + inc
        n = n2
    trace.total = total
    return total, trace


def ostrowski_sweep(t: Scalar, cf: cfrac.CFExpansion, n_max: int,
                    validate: bool = False):
    """S(n,t), recursion depth and the Snfinal bound for every n <= n_max.

    Memoizes S(n') across the sweep, so the whole table costs one recursion
    step per n.  Returns (S, depth, bound) lists indexed by n, where bound[n]
    is (1/2) * sum of lambda_1..lambda_{j*(n)}.
    """
    tab = OstrowskiTables(t, cf)
    tab.extend_past(n_max)
    lam_prefix = [Fraction(0), Fraction(0)]  # index j -> (1/2) sum_{k<=j} lambda_k
    for j in range(1, len(tab.b)):
        lam_prefix.append(lam_prefix[-1] + Fraction(tab.cf.coeff(j), 2))
    S: list = [Fraction(0)] * (n_max + 1)
    depth = [0] * (n_max + 1)
    bound: list = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        j, q, n2, rho, inc = _ostrowski_step(tab, n, validate=validate)
        S[n] = S[n2] + inc
        depth[n] = depth[n2] + 1
        bound[n] = lam_prefix[j + 1]
    return S, depth, bound


# -- Gauss-map (Bsequence) recursion --------------------------------------


def bseq_S(n: int, t: Scalar) -> tuple[Scalar, SumTrace]:
    """Exact S(n,t) via the orbit t_j of the Gauss map and n_j = floor(t_j n_j)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if is_rational(t):
        raise NotIrrational("bseq recursion needs irrational t")
    if not (0 < t <= 1):
        raise DomainError("t must lie in (0, 1]")
    from .limits import eta_tilde

    trace = SumTrace("bseq")
    total: Scalar = Fraction(0)
    tj: Scalar = t
    nj = n
    lam_half_sum = Fraction(0)
    j = 0
    while nj > 0:
        x = tj * nj
        fl = floor(x)
        term = nj * eta_tilde(x) + (x - fl) / 2
        total = total + ((-1) ** j) * term
        trace.steps.append(BseqStep(j, nj, tj, term))
        lam_half_sum += Fraction(floor(tj.reciprocal()), 2)
        tj = tj.reciprocal()
        tj = tj - floor(tj)
        nj = fl
        j += 1
    trace.total = total
    if abs(total) > lam_half_sum:
        raise AssertionError("modified Bsequence estimate violated")
    return total, trace


# -- Theorem identities and bounds -----------------------------------------


def thm21b_identity(n: int, t: Scalar) -> tuple[Scalar, Scalar]:
    """Both sides of the B_n(t) decomposition for 0 < t <= 1; must be equal."""
    if isinstance(t, int):
        t = Fraction(t)
    if not (0 < t <= 1):
        raise DomainError("t must lie in (0, 1]")
    from .limits import eta_tilde

    lhs = B(n, t)
    x = t * n
    m = floor(x)
    rhs = eta_tilde(x) + (x - m) / (2 * n)
    if m >= 1:
        inv = 1 / t if is_rational(t) else t.reciprocal()
        inner = inv - floor(inv)
        if is_rational(inner):
            b_inner = B_left(m, as_fraction(inner))
        else:
            b_inner = B(m, inner)
        rhs = rhs - Fraction(m, n) * b_inner
    return lhs, rhs


def thm21a_identity(n: int, a_over_b: Fraction, bstar: int,
                    x: Scalar) -> tuple[Scalar, Scalar]:
    """Both sides of the Farey-neighbor decomposition of B_n(a/b + x/(bn)).

    a/b and its right neighbor a*/b* must be consecutive in the extended
    Farey sequence of order b, with b <= n and 0 < x <= n/b*.
    """
    from .limits import eta_tilde

    if isinstance(x, int):
        x = Fraction(x)
    ab = Fraction(a_over_b)
    a, b = ab.numerator, ab.denominator
    if bstar < 1 or (1 + a * bstar) % b != 0:
        raise NotNeighbors(f"no right neighbor of {ab} with denominator {bstar}")
    astar = (1 + a * bstar) // b
    if astar * b - a * bstar != 1:
        raise NotNeighbors(f"{astar}/{bstar} is not the right neighbor of {ab}")
    if b > n:
        raise DomainError("need b <= n")
    if not (0 < x and x * bstar <= n):
        raise DomainError("need 0 < x <= n/b*")

    lhs = B(n, ab + x / (b * n))
    u = (n / x - bstar) / b if is_rational(x) else (x.reciprocal() * n - bstar) / b
    rhs = (B(n, ab) + Fraction(1, 2 * b) + eta_tilde(x) / b
           - (x / n) * _B_real_left(x, u) + x / (2 * b * n))
    tail = Fraction(0)
    for k in range(1, floor(x) + 1):
        tail += beta(Fraction(n - k * bstar, b))
    rhs = rhs + tail / n
    return lhs, rhs


def lemma31_bound(x: Scalar, a_over_b: Fraction):
    """B_{x,0}(a/b) with the bound |value| <= b/x; returns (value, bound, holds)."""
    if isinstance(x, int):
        x = Fraction(x)
    ab = Fraction(a_over_b)
    if not x > 0:
        raise DomainError("x must be positive")
    value = brute_S0(floor(x), ab) / x
    bound = ab.denominator / x
    return value, bound, abs(value) <= bound


def tab_sum(x: int, a_over_b: Fraction) -> Fraction:
    """Exact sum of t_{a/b}(m) = 1 + 2b*beta(am/b) over m <= x, with its
    a-priori bound |sum| <= b(b+1) asserted."""
    ab = Fraction(a_over_b)
    a, b = ab.numerator, ab.denominator
    total = Fraction(0)
    for m in range(1, x + 1):
        total += 1 + 2 * b * beta(Fraction(a * m, b))
    if abs(total) > b * (b + 1):
        raise AssertionError("t_{a/b} partial sum bound violated")
    return total


def l2_norm_sq(x: int) -> Fraction:
    """Exact ||B_x||_2^2 = (1/(12x^2)) sum_{m,n<=x} gcd(m,n)^2/(mn)."""
    if x < 1:
        raise ValueError("x must be >= 1")
    total = _pair_sum(x)
    result = total / (12 * x * x)
    assert result >= Fraction(x, 12 * x * x)
    return result


def _pair_sum(x: int) -> Fraction:
    total = Fraction(0)
    for m in range(1, x + 1):
        row = Fraction(0)
        for n in range(1, x + 1):
            g = math.gcd(m, n)
            row += Fraction(g * g, n)
        total += row / m
    return total


def l2_norm_sq_sweep(x_max: int) -> list[Fraction]:
    """[||B_1||^2, ..., ||B_{x_max}||^2] via incremental pair sums."""
    out = []
    total = Fraction(0)
    for x in range(1, x_max + 1):
        border = Fraction(0)
        for m in range(1, x):
            g = math.gcd(m, x)
            border += Fraction(g * g, m)
        total += 1 + 2 * border / x
        val = total / (12 * x * x)
        assert val >= Fraction(x, 12 * x * x)
        out.append(val)
    return out
