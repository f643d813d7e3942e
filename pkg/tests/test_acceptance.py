"""Acceptance gate: one test per criterion, at the stated tolerances.

Each test prints a single PASS/FAIL line (visible with pytest -s or in
the failure report) including its runtime against the stated budget.
"""

import time

import pytest

from polymer_heaps.asymptotics import (
    check_directed_asymptotics,
    check_multi_growth,
    find_constants,
)
from polymer_heaps.bijections import (
    animal_from_connected_heap,
    animal_from_pyramid,
    count_anchored_heaps,
    enumerate_anchored_heaps,
    enumerate_heaps,
    nordic_compose,
    nordic_decompose,
    project,
    random_beta_picker,
)
from polymer_heaps.gf_engine import (
    TruncatedSeries,
    check_lemma_HD,
    series_Dj,
    series_D1,
    series_M,
    series_S,
)
from polymer_heaps.heap_core import is_pyramid, left_half_width
from polymer_heaps.lattice_animals import (
    count_animals,
    directed_lw_counts,
    enumerate_animals,
)

SCHROEDER = [1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859]
MAX_N = 8


class _Criterion:
    def __init__(self, number: int, name: str, budget_s: float):
        self.number = number
        self.name = name
        self.budget_s = budget_s
        self.start = time.perf_counter()
        self.ok = True
        self.notes: list[str] = []

    def check(self, ok: bool, note: str) -> None:
        if not ok:
            self.ok = False
            self.notes.append(note)

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.start
        status = "PASS" if self.ok else "FAIL"
        detail = ("; " + "; ".join(self.notes)) if self.notes else ""
        print(f"ACCEPTANCE {self.number} [{self.name}]: {status} ({elapsed:.1f}s / budget {self.budget_s:.0f}s){detail}")
        assert self.ok, f"criterion {self.number} failed: {'; '.join(self.notes)}"
        assert elapsed < self.budget_s, f"criterion {self.number} exceeded its time budget"


def test_criterion_1_schroeder():
    crit = _Criterion(1, "Schroeder check", 1.0)
    s = series_S(10)
    crit.check([s[n] for n in range(1, 11)] == SCHROEDER, "S prefix mismatch")
    crit.finish()


def test_criterion_2_directed_oracle():
    crit = _Criterion(2, "directed-animal oracle", 60.0)
    d = series_D1(10)
    s = series_S(10)
    directed = count_animals(10, "directed")
    half = count_animals(10, "half")
    crit.check(
        all(directed[n] == d[n] for n in range(1, 11)),
        f"directed counts {directed[1:]} != D coefficients",
    )
    crit.check(
        all(half[n] == s[n] for n in range(1, 11)),
        f"half counts {half[1:]} != S coefficients",
    )
    hist = directed_lw_counts(MAX_N)
    for j in range(MAX_N + 1):
        dj = series_Dj(MAX_N, j)
        crit.check(
            all(hist[n][j] == dj[n] for n in range(1, MAX_N + 1)),
            f"lw distribution mismatch at j={j}",
        )
    crit.finish()


def test_criterion_3_multi_oracle():
    crit = _Criterion(3, "multi-directed oracle", 600.0)
    m = series_M(MAX_N)
    multi = count_animals(MAX_N, "multi")
    heaps = [0] + [len(enumerate_heaps(n, "connected")) for n in range(1, MAX_N + 1)]
    crit.check(
        all(multi[n] == m[n] for n in range(1, MAX_N + 1)),
        f"multi counts {multi[1:]} != M coefficients",
    )
    crit.check(
        all(heaps[n] == m[n] for n in range(1, MAX_N + 1)),
        f"connected-heap counts {heaps[1:]} != M coefficients",
    )
    crit.check(multi[1:6] == [1, 4, 20, 110, 636], "expected prefix 1, 4, 20, 110, 636")
    crit.finish()


def test_criterion_4_bijection_round_trips():
    crit = _Criterion(4, "bijection round-trips", 600.0)
    for n in range(1, MAX_N + 1):
        pyramids = enumerate_heaps(n, "pyramid")
        crit.check(
            all(project(animal_from_pyramid(p)) == p for p in pyramids),
            f"project . animal_from_pyramid != id at n={n}",
        )
        directed = enumerate_animals(n, "directed")
        crit.check(
            all(animal_from_pyramid(project(a)) == a for a in directed),
            f"animal_from_pyramid . project != id at n={n}",
        )
        connected = enumerate_heaps(n, "connected")
        crit.check(
            all(project(animal_from_connected_heap(c)) == c for c in connected),
            f"project . animal_from_connected_heap != id at n={n}",
        )
        multi = enumerate_animals(n, "multi")
        crit.check(
            all(animal_from_connected_heap(project(a)) == a for a in multi),
            f"animal_from_connected_heap . project != id at n={n}",
        )
        pick = random_beta_picker(seed=1000 + n)
        crit.check(
            all(
                animal_from_connected_heap(c, pick) == animal_from_connected_heap(c)
                for c in connected
            ),
            f"reconstruction depends on the peeled polymer at n={n}",
        )
    crit.finish()


def test_criterion_5_nordic_round_trip():
    crit = _Criterion(5, "Nordic round-trip", 600.0)
    for n in range(1, MAX_N + 1):
        targets = [c for c in enumerate_heaps(n, "connected") if not is_pyramid(c)]
        for c in targets:
            quad = nordic_decompose(c)  # the constructor checks the invariants
            crit.check(
                left_half_width(quad.p) >= quad.k + 1,
                f"half-width invariant violated at n={n}",
            )
            if nordic_compose(quad) != c:
                crit.check(False, f"nordic round-trip failed at n={n} for {c}")
                break
    crit.finish()


def test_criterion_6_lemma_identities():
    crit = _Criterion(6, "A_k and H_k lemma identities", 600.0)
    order = 14
    s = series_S(order)
    one = TruncatedSeries([1], order)
    for k in range(5):
        expected = s * (one + s) ** k
        counted = count_anchored_heaps(k, order)
        crit.check(
            counted == list(expected.coeffs),
            f"A_{k} census != S(1+S)^{k} coefficients",
        )
        crit.check(
            all(
                len(enumerate_anchored_heaps(k, n)) == expected[n]
                for n in range(1, MAX_N + 1)
            ),
            f"A_{k} enumeration != S(1+S)^{k} for n <= {MAX_N}",
        )
    for row in check_lemma_HD(order, kmax=4):
        crit.check(
            row["pass"],
            f"H_k identity failed at k={row['k']}, n={row['first_failure']}",
        )
    crit.finish()


def test_criterion_7_constants():
    crit = _Criterion(7, "singularity constants", 1.0)
    c = find_constants()
    residual = abs(1 - 5 * c.rho_B - 7 * c.rho_B**2 + c.rho_B**3)
    crit.check(residual < 1e-12, f"cubic residual {residual:.2e}")
    crit.check(abs(c.rho_B - 0.1635) < 5e-4, f"rho_B = {c.rho_B}")
    crit.check(round(c.rho_M, 3) == 0.154, f"rho_M = {c.rho_M} does not print as 0.154")
    crit.check(round(c.mu, 3) == 6.475, f"mu = {c.mu} does not print as 6.475")
    crit.finish()


def test_criterion_8_directed_asymptotics():
    # NOTE: the 2% tolerance for the lw ratio at n = 1000 is not attainable:
    # lw(n)/sqrt(pi n) approaches 2^(-3/4) with an O(1/sqrt(n)) correction
    # (about 4.2% at n = 1000, crossing 2% only near n = 4500).  The check
    # is asserted as specified and fails honestly; see the directed-counts
    # part, which meets its tolerance with three orders of margin.
    crit = _Criterion(8, "directed asymptotics at order 1000", 120.0)
    report = check_directed_asymptotics(1000, nref=100)
    ref, top = report["points"]
    crit.check(
        top["dev_d"] < 0.02,
        f"d-ratio deviation {top['dev_d']:.2%} at n=1000 exceeds 2%",
    )
    crit.check(
        top["dev_lw"] < 0.02,
        f"lw-ratio deviation {top['dev_lw']:.2%} at n=1000 exceeds 2%",
    )
    crit.check(top["dev_d"] < ref["dev_d"], "d deviation not decreasing from n=100")
    crit.check(top["dev_lw"] < ref["dev_lw"], "lw deviation not decreasing from n=100")
    crit.finish()


def test_criterion_9_multi_growth():
    crit = _Criterion(9, "multi-directed growth", 300.0)
    report = check_multi_growth(300, stats_max=MAX_N)
    crit.check(
        abs(report["ratio"] - report["mu"]) < 0.01,
        f"M ratio {report['ratio']} vs mu {report['mu']}",
    )
    means = report["mean_minimal_pieces"]
    widths = report["mean_width"]
    crit.check(
        all(a < b for a, b in zip(means, means[1:])),
        f"mean minimal pieces not strictly increasing: {means}",
    )
    crit.check(
        all(a < b for a, b in zip(widths, widths[1:])),
        f"mean width not strictly increasing: {widths}",
    )
    crit.finish()
