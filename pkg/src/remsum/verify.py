"""Named verification suites driven by the CLI `verify` subcommand.

Each suite returns a list of check records {name, pass, detail}.  Sizes:
"quick" keeps every suite in the seconds range, "full" runs the complete
parameter grids.  All randomness is seeded and reproducible.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import cfrac, dirichlet, farey, measure, sums
from .exactnum import QuadExt, beta0


def corpus() -> dict:
    """The standing test corpus of quadratic irrationals in (0, 1)."""
    return {
        "golden": QuadExt(-1, 1, 5, 2),   # (sqrt(5)-1)/2, all quotients 1
        "sqrt2m1": QuadExt(-1, 1, 2, 1),  # sqrt(2)-1, all quotients 2
        "sqrt3m1": QuadExt(-1, 1, 3, 1),  # sqrt(3)-1, quotients 1,2,1,2,...
    }


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def suite_oracle(size: str = "quick", seed: int = 0) -> list[dict]:
    n_max = 2000 if size == "full" else 300
    checks = []
    for label, t in corpus().items():
        cf = cfrac.expand(t, 64)
        prefix = sums.s0_prefix(t, n_max)  # equals S(n,t): kt never integral
        tab = sums.OstrowskiTables(t, cf)
        ok = True
        detail = ""
        for n in range(1, n_max + 1):
            vo = sums.ostrowski_S(n, t, cf, tables=tab)[0]
            vb = sums.bseq_S(n, t)[0]
            if vo != prefix[n] or vb != prefix[n]:
                ok, detail = False, f"disagreement at n={n}"
                break
        checks.append(_check(f"oracle-equality[{label}, n<={n_max}]", ok, detail))
    return checks


def suite_bounds(size: str = "quick", seed: int = 0) -> list[dict]:
    checks = []
    n_sweep = 100000 if size == "full" else 2000
    t = corpus()["golden"]
    cf = cfrac.expand(t, 8)
    S, depth, bound = sums.ostrowski_sweep(t, cf, n_sweep, validate=True)
    ok = all(abs(S[n]) <= bound[n] for n in range(1, n_sweep + 1))
    checks.append(_check("snfinal-bound[golden]", ok))
    ok = all(depth[n] <= 4 * math.log(n) for n in range(3, n_sweep + 1))
    checks.append(_check("recursion-depth<=4logn[golden]", ok))
    ok = all(abs(S[n]) <= Fraction(2 * math.log(n)) for n in range(3, n_sweep + 1))
    checks.append(_check("golden-|S|<=2logn", ok))

    n_bseq = 2000 if size == "full" else 300
    ok = True
    for label, t in corpus().items():
        for n in range(8, n_bseq + 1, 7):
            if len(sums.bseq_S(n, t)[1]) > 4 * math.log(n):
                ok = False
    checks.append(_check("bseq-depth<=4logn", ok))

    bmax, xmax = (20, 500) if size == "full" else (8, 100)
    ok = True
    for b in range(1, bmax + 1):
        for a in range(0, b + 1):
            if math.gcd(a, b) != 1:
                continue
            ab = Fraction(a, b)
            for x in range(1, xmax + 1, 13):
                if not sums.lemma31_bound(x, ab)[2]:
                    ok = False
                sums.tab_sum(x, ab)  # raises if its bound fails
    checks.append(_check("lemma31-and-tab-bounds", ok))

    l2max = 200 if size == "full" else 50
    vals = sums.l2_norm_sq_sweep(l2max)  # lower bound asserted inside
    ok = all(Fraction(1, 12) <= (x + 1) * v <= 2 for x, v in enumerate(vals))
    checks.append(_check("l2-bracket", ok))
    return checks


def suite_measure(size: str = "quick", seed: int = 0) -> list[dict]:
    checks = []
    mmax = 4 if size == "full" else 3
    ok = True
    from itertools import product
    for m in range(1, mmax + 1):
        for alphas in product(range(2, 6), repeat=m):
            ms = measure.measure_exact(alphas)
            if not ms.lower_bound <= ms.exact_measure <= ms.upper_bound:
                ok = False
    checks.append(_check(f"theorem25-bounds[m<={mmax}]", ok))

    kmax = 100 if size == "full" else 50
    ok = all(sum(cfrac.fundamental_interval((lam,))[2] for lam in range(1, K + 1))
             == 1 - Fraction(1, K + 1) for K in (2, 5, kmax))
    checks.append(_check("partition-telescoping", ok))

    ns = (100, 1000) if size == "full" else (100,)
    samples = 20 if size == "full" else 5
    ok = True
    detail = ""
    for n in ns:
        theta = 1 + math.log(1 + math.log(n))
        rep = measure.verify_b0_mass(n, theta, samples, seed)
        if not rep["pass"]:
            ok, detail = False, f"n={n}"
    checks.append(_check("b0-mass-bound", ok, detail))
    return checks


def suite_farey(size: str = "quick", seed: int = 0) -> list[dict]:
    checks = []
    rng = random.Random(seed)
    nmax = 300 if size == "full" else 60
    ok = True
    for n in range(1, nmax + 1, 7):
        fr = farey.farey(n).fractions
        if any(y.numerator * x.denominator - x.numerator * y.denominator != 1
               for x, y in zip(fr, fr[1:])):
            ok = False
    checks.append(_check("neighbor-determinant", ok))

    tables = farey.build_tables(600)
    n_id, trials = (60, 100) if size == "full" else (20, 30)
    ok = True
    for _ in range(trials):
        n = rng.randint(1, n_id)
        t = Fraction(rng.randint(0, 600), 601)  # denominator 601 > n: not in F_n
        count, lhs = farey.farey_count(n, t, tables)
        if lhs != count:
            ok = False
    checks.append(_check("farey-counting-identity", ok))

    nmax_mob = 500 if size == "full" else 100
    ok = True
    for label, t in list(corpus().items())[:2]:
        for n in range(1, nmax_mob + 1, 9):
            total = sum(farey.q_k(d, t, tables, "beta0")
                        for d in farey._divisors(n))
            if beta0(n * t) != -total:
                ok = False
    checks.append(_check("moebius-inversion-beta0", ok))

    xmax = 300 if size == "full" else 50
    ok = True
    for x in range(1, xmax + 1, 23):
        t = Fraction(rng.randint(0, 100), 101)
        if farey.phi_x(x, t, tables) != farey.phi_x_qsum(x, t, tables):
            ok = False
    checks.append(_check("phi-forms-agree", ok))
    return checks


def suite_dirichlet(size: str = "quick", seed: int = 0) -> list[dict]:
    checks = []
    ok = (abs(dirichlet.zeta(2) - math.pi ** 2 / 6) < 1e-12
          and abs(dirichlet.zeta(4) - math.pi ** 4 / 90) < 1e-12)
    checks.append(_check("zeta-classical-values", ok))

    K = 10000 if size == "full" else 2000
    tables = farey.build_tables(K)
    ok_a = ok_b = True
    for label, t in corpus().items():
        s0 = sums.s0_prefix(t, K)
        for s in (2, 2 + 5j):
            ea = dirichlet.f_beta_partial(t, s, K, s0=s0)
            em = dirichlet.f_beta_mellin(t, s, K, s0=s0)
            if abs(ea.value - em.value) > ea.tail_bound + em.tail_bound:
                ok_a = False
        eb = dirichlet.f_beta_partial(t, 2, K, s0=s0)
        eq = dirichlet.f_q_partial(t, 2, K, tables, s0=s0)
        if abs(dirichlet.zeta(2) * eq.value + eb.value) > \
                abs(dirichlet.zeta(2)) * eq.tail_bound + eb.tail_bound:
            ok_b = False
    checks.append(_check("mellin-identity-matched-truncation", ok_a))
    checks.append(_check("zeta-times-Fq-plus-Fbeta", ok_b))
    return checks


SUITES = {
    "oracle": suite_oracle,
    "bounds": suite_bounds,
    "measure": suite_measure,
    "farey": suite_farey,
    "dirichlet": suite_dirichlet,
}


def run_suite(name: str, size: str = "quick", seed: int = 0) -> dict:
    if name == "all":
        checks = []
        for fn in SUITES.values():
            checks.extend(fn(size, seed))
    else:
        checks = SUITES[name](size, seed)
    return {"suite": name, "size": size, "seed": seed, "checks": checks,
            "pass": all(c["pass"] for c in checks)}
