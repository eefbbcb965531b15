"""Fixed-seed invariant suite; ``homflygamma selfcheck`` and the acceptance tests run it.

Each check returns a :class:`CheckResult`. Checks that compare Gamma across
equivalent words call :func:`compute_gamma` directly so the conjugation
cache cannot make them pass vacuously.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .braid import (
    BraidWord,
    closure_info,
    enumerate_words,
    labeled_markov_moves,
    lcs_commutator,
    mirror,
    random_braid,
    random_knot_braid,
)
from .conway import conway_polynomial
from .hecke import compute_gamma, gamma
from .poly import LaurentVZ, PolyMZ, substitute_mu
from .spanlab import predicted_dimension, rank_experiment
from .vassiliev import corrected_series, gamma_from_series, is_homfly_k_trivial, theorem1_check

ONE_MINUS_MUZ = PolyMZ({(0, 0): 1, (1, 1): -1})
SIGMA_CUBED_FACTOR = PolyMZ({(0, 0): 1, (1, 1): 1, (0, 2): 1})


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _random_words(count: int, seed: int, max_n: int = 5, max_len: int = 12) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_braid(rng.randint(2, max_n), rng.randint(0, max_len), rng) for _ in range(count)]


def _random_knots(count: int, seed: int, max_n: int, max_len: int) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_knot_braid(rng.randint(2, max_n), rng.randint(0, max_len), rng) for _ in range(count)]


def check_defining_relations(count: int = 500, seed: int = 1) -> CheckResult:
    failures = []
    rng = random.Random(seed + 10_000)
    for n in range(1, 7):
        if compute_gamma(BraidWord(n)) != PolyMZ.monomial((n - 1, 0)):
            failures.append(f"Gamma(id_{n})")
    z = PolyMZ.var("z")
    for w in _random_words(count, seed):
        g = compute_gamma(w)
        # skein at a random position: rotate so the slot sits at the end
        p = rng.randint(0, w.length)
        i = rng.randint(1, w.strands - 1)
        base = w.letters[p:] + w.letters[:p]
        plus = compute_gamma(BraidWord(w.strands, base + (i,)))
        minus = compute_gamma(BraidWord(w.strands, base + (-i,)))
        if plus - minus != z * g:
            failures.append(f"skein {w}")
        for kind, v in labeled_markov_moves(w):
            expected = g * ONE_MINUS_MUZ if kind == "stabilize-" else g
            if compute_gamma(v) != expected:
                failures.append(f"{kind} {w} -> {v}")
    return CheckResult(
        "1 defining relations",
        not failures,
        f"{count} braids, {len(failures)} failures" + (f" e.g. {failures[0]}" if failures else ""),
    )


def check_closed_forms(count: int = 100, seed: int = 2) -> CheckResult:
    failures = []
    for k in range(1, 7):
        w = BraidWord(k + 1, tuple(-i for i in range(1, k + 1)))
        if compute_gamma(w) != ONE_MINUS_MUZ**k:
            failures.append(f"(1-mu z)^{k}")
    rng = random.Random(seed)
    for _ in range(count):
        j = rng.randint(1, 4)
        b = random_braid(j, rng.randint(0, 8), rng) if j > 1 else BraidWord(1)
        ext = BraidWord(j + 1, b.letters + (j, j, j))
        if compute_gamma(ext) != SIGMA_CUBED_FACTOR * compute_gamma(b):
            failures.append(f"sigma_j^3 on {b}")
    return CheckResult("2 closed forms", not failures, f"6 + {count} cases, {len(failures)} failures")


def structural_violations(w: BraidWord, value: PolyMZ) -> list[str]:
    out = []
    info = closure_info(w)
    n, c, e = w.strands, info.components, w.exponent_sum
    if value.is_zero():
        return ["zero Gamma"]
    if value.degree("mu") >= n:
        out.append("mu-degree")
    if value.degree("z") > w.length:
        out.append("z-degree")
    if value.coeff_in_z(0) != PolyMZ.monomial((c - 1, 0)).coeff_in_z(0):
        out.append("p0")
    for j in range(value.degree("z") + 1):
        pj = value.coeff_in_z(j)
        if (j + c) % 2 == 0 and not pj.is_odd():
            out.append(f"parity p{j}")
        if (j + c) % 2 == 1 and not pj.is_even():
            out.append(f"parity p{j}")
        if c == 1 and not pj.is_zero() and pj.degree(0) > j:
            out.append(f"deg p{j}")
    if c == 1:
        p1 = value.coeff_in_z(1)
        expected = PolyMZ.monomial((1, 0), (e - n + 1) // 2).coeff_in_z(0)
        if p1 != expected:
            out.append("p1")
    return out


def check_structure(count: int = 500, seed: int = 3) -> CheckResult:
    failures = []
    for w in _random_words(count, seed):
        bad = structural_violations(w, gamma(w).value)
        if bad:
            failures.append(f"{w}: {bad}")
    return CheckResult("3 structural theorems", not failures, f"{count} braids, {len(failures)} failures")


def check_alexander(count: int = 200, seed: int = 4) -> CheckResult:
    failures = []
    for w in _random_knots(count, seed, max_n=4, max_len=10):
        if conway_polynomial(w) != gamma(w).value.at_mu_zero():
            failures.append(str(w))
    return CheckResult("4 Alexander cross-check", not failures, f"{count} knots, {len(failures)} failures")


TREFOIL_P = LaurentVZ({(2, 0): 2, (4, 0): -1, (2, 2): 1})
FIGURE_EIGHT_P = LaurentVZ({(-2, 0): 1, (0, 0): -1, (2, 0): 1, (0, 2): -1})


def homfly(w: BraidWord) -> LaurentVZ:
    return substitute_mu(gamma(w).value, w.exponent_sum, w.strands)


def check_homfly(count: int = 100, seed: int = 5) -> CheckResult:
    failures = []
    if homfly(BraidWord(2, (1, 1, 1))) != TREFOIL_P:
        failures.append("trefoil")
    if homfly(BraidWord(3, (1, -2, 1, -2))) != FIGURE_EIGHT_P:
        failures.append("figure-eight")
    for w in _random_knots(count, seed, max_n=5, max_len=12):
        if homfly(mirror(w)) != homfly(w).mirror():
            failures.append(f"mirror {w}")
    return CheckResult("5 Homfly conversion", not failures, f"2 + {count} knots, {len(failures)} failures")


def theorem1_sweep(cases: tuple[tuple[int, int], ...] = ((2, 8), (3, 7))) -> dict:
    stats = {"words": 0, "knots": 0, "trivial": 0, "counterexamples": []}
    for n, max_len in cases:
        for w in enumerate_words(n, max_len):
            stats["words"] += 1
            if not closure_info(w).is_knot:
                continue
            stats["knots"] += 1
            rep = theorem1_check(w)
            if rep.hypothesis_holds:
                stats["trivial"] += 1
            if not rep.theorem_consistent:
                stats["counterexamples"].append(str(w))
    return stats


def check_theorem1() -> CheckResult:
    s = theorem1_sweep()
    return CheckResult(
        "6 Theorem 1 sweep",
        not s["counterexamples"],
        f"{s['words']} words, {s['knots']} knots, {s['trivial']} homfly-n-trivial, "
        f"{len(s['counterexamples'])} counterexamples",
    )


def check_stanford(depths: tuple[int, ...] = (2, 3)) -> CheckResult:
    failures = []
    for d in depths:
        w = BraidWord(3, (1, 2)) * lcs_commutator(d)
        if not is_homfly_k_trivial(w, d - 1):
            failures.append(f"d={d} not homfly-{d - 1}-trivial")
        if homfly(w) == LaurentVZ.one():
            failures.append(f"d={d} has P = 1")
    return CheckResult("7 Stanford remark", not failures, f"depths {depths}, {len(failures)} failures")


def check_dimensions(samples: int = 60, seed: int = 8) -> CheckResult:
    failures = []
    for n in range(2, 6):
        for k in range(8):
            rep = rank_experiment(n, k, samples, seed + 100 * n + k)
            if rep.observed_rank != predicted_dimension(n, k) or (k < n and rep.witness_count == 0):
                failures.append(f"(n={n}, k={k}) observed {rep.observed_rank} vs {rep.predicted}")
    return CheckResult("8 dimensions", not failures, f"32 (n,k) pairs, {len(failures)} mismatches")


def check_reconstruction(count: int = 200, seed: int = 9) -> CheckResult:
    failures = []
    for w in _random_knots(count, seed, max_n=5, max_len=8):
        g = gamma(w)
        c = w.length
        if gamma_from_series(corrected_series(g, c), c) != g.value:
            failures.append(str(w))
    return CheckResult("9 reconstruction", not failures, f"{count} knots, {len(failures)} failures")


def check_performance(n: int = 4, lengths: tuple[int, ...] = (50, 100, 200), seed: int = 10,
                      budget: float = 60.0) -> CheckResult:
    times = []
    for L in lengths:
        w = random_braid(n, L, seed)
        start = time.perf_counter()
        compute_gamma(w)
        times.append(max(time.perf_counter() - start, 1e-6))
    xs = [math.log(L) for L in lengths]
    ys = [math.log(t) for t in times]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    ok = slope < 3 and times[-1] < budget
    timings = ", ".join(f"L={L}: {t:.3f}s" for L, t in zip(lengths, times))
    return CheckResult("10 performance", ok, f"{timings}; log-log slope {slope:.2f}")


ALL_CHECKS = [
    check_defining_relations,
    check_closed_forms,
    check_structure,
    check_alexander,
    check_homfly,
    check_theorem1,
    check_stanford,
    check_dimensions,
    check_reconstruction,
    check_performance,
]


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
