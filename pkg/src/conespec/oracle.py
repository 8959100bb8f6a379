"""Independent implementations used for differential testing.

`reference_ordinary` is a deliberately literal array-walking program for
ordinary-singularity configurations, kept independent of the engine module
(its only deviation from a straight scripted transliteration is that ceilings
are computed exactly instead of through a bounded 100 - int(100 - v) trick;
the trick is still evaluated and asserted to agree on its valid domain).
`cross_check` runs the engine against it and against the brute-force
counters and reports the first differing cell.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import (ConeSpectrumTable, CurveConfig, GlobalComponent,
                     Incidence, ReducedConeConfig, binom2, curve_table,
                     local_data_table, ordinary_middle_row, residue_degree,
                     smooth_cone_coeffs)
from .local import LocalBranch, SingularPoint, lattice_count
from .spectrum import SpectrumVector


def brute_lattice(w: int, wp: int, bound: int) -> int:
    """Literal double loop counting w*m1 + wp*m2 <= bound over m1, m2 >= 1."""
    total = 0
    for m1 in range(1, max(bound, 0) + 1):
        for m2 in range(1, max(bound, 0) + 1):
            if w * m1 + wp * m2 <= bound:
                total += 1
    return total


def brute_coeffs(dprime: int, n: int) -> list[int]:
    """(n+1)-fold convolution of the indicator of [1, dprime-1], returned as
    coefficients starting at exponent n+1 (same alignment as
    `smooth_cone_coeffs`)."""
    if dprime == 1:
        return []
    indicator = [0] + [1] * (dprime - 1)
    coeffs = [1]
    for _ in range(n + 1):
        out = [0] * (len(coeffs) + len(indicator) - 1)
        for a, ca in enumerate(coeffs):
            if ca:
                for b, cb in enumerate(indicator):
                    if cb:
                        out[a + b] += ca * cb
        coeffs = out
    return coeffs[n + 1:]


_IDIOM_BOUND = 100


def _idiom_ceil(v: Fraction) -> int:
    """Exact ceiling, with the bounded 100 - int(100 - v) idiom asserted to
    agree wherever that idiom is valid (v < 100)."""
    exact = math.ceil(v)
    if v < _IDIOM_BOUND:
        trick = _IDIOM_BOUND - int(_IDIOM_BOUND - v)
        assert trick == exact, (v, trick, exact)
    return exact


@dataclass
class ReferenceState:
    """Raw working arrays of the reference program: one row per point in
    `al` (branch count followed by branch multiplicities), expanded degree
    and multiplicity lists, the 4 x d result matrix `sp` (three rows plus
    their running sum), and the `dsq`, `od`, `chi` accumulators."""

    al: list[list[int]] = field(default_factory=list)
    ds: list[int] = field(default_factory=list)
    as_: list[int] = field(default_factory=list)
    sp: list[list[int]] = field(default_factory=list)
    dsq: int = 0
    od: int = 0
    chi: int = 0


def reference_state(cfg: CurveConfig) -> ReferenceState:
    """Run the reference computation for an ordinary configuration."""
    if not cfg.is_ordinary():
        raise ValueError("the reference program handles ordinary points only")
    if cfg.incidence is None:
        raise ValueError("the reference program needs incidence data "
                         "(an empty multiset is fine)")
    state = ReferenceState()
    for comp in cfg.components:
        state.ds.append(comp.degree)
        state.as_.append(comp.multiplicity)
    for point in cfg.points:
        row = [point.branch_count]
        row.extend(b.multiplicity for b in point.branches)
        state.al.append(row)
    state.od = cfg.nodes

    weight = 0
    for count, value in cfg.incidence.pairs:
        weight += -count * value * (value - 1) // 2
    state.dsq = weight
    for dk in state.ds:
        state.dsq += dk * (dk - 1) // 2

    d = sum(dk * ak for dk, ak in zip(state.ds, state.as_))
    dr = sum(state.ds)
    q = len(state.al)
    sp = [[0] * d for _ in range(4)]
    for i in range(1, d + 1):
        s = 0
        for dk, ak in zip(state.ds, state.as_):
            s += dk * (_idiom_ceil(Fraction(ak * i, d)) - 1)
        io = i - s
        sp[0][i - 1] = (io - 1) * (io - 2) // 2
        sp[1][i - 1] = state.dsq + (io - 1) * (dr - io - 1)
        sp[2][i - 1] = (dr - io - 1) * (dr - io - 2) // 2
        for row in state.al:
            ga = Fraction(0)
            for mult in row[1:]:
                v = Fraction(mult * i, d)
                ga += v - _idiom_ceil(v) + 1
            p = _idiom_ceil(ga)
            sp[0][i - 1] -= (p - 1) * (p - 2) // 2
            sp[1][i - 1] -= (p - 1) * (row[0] - p)
            sp[2][i - 1] -= (row[0] - p) * (row[0] - p - 1) // 2
        for e in range(3):
            sp[3][i - 1] += sp[e][i - 1]
    state.sp = sp

    p = sum((row[0] - 1) ** 2 for row in state.al)
    state.chi = dr * (dr - 3) + 3 - p - state.od
    return state


def reference_ordinary(cfg: CurveConfig) -> ConeSpectrumTable:
    """Reference table for an ordinary configuration. The never-printed
    integer-exponent cell (e=2, i=d) follows the support convention, so the
    full rows are directly comparable with the engine's."""
    state = reference_state(cfg)
    d = sum(dk * ak for dk, ak in zip(state.ds, state.as_))
    dr = sum(state.ds)
    row2 = list(state.sp[2])
    row2[d - 1] -= 1
    return ConeSpectrumTable(d, dr, state.chi,
                             (tuple(state.sp[0]), tuple(state.sp[1]),
                              tuple(row2)))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" {c.detail}" if c.detail and not c.passed else ""
            lines.append(f"{c.name}: {status}{suffix}")
        lines.append("result: " + ("all-pass" if self.passed else "MISMATCH"))
        return "\n".join(lines) + "\n"

    def record(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


def _first_row_mismatch(name, got, want, e):
    for i, (g, w) in enumerate(zip(got, want), start=1):
        if g != w:
            return CheckResult(name, False,
                               f"first mismatch at (i={i}, e={e}, "
                               f"expected={w}, actual={g})")
    return CheckResult(name, True)


def _touched_lattice_args(cfg: CurveConfig) -> set[tuple[int, int, int]]:
    args = set()
    d = cfg.degree
    for i in range(1, d + 1):
        for p in cfg.points:
            w, wp = p.weights
            ceil_g = math.ceil(residue_degree(p, i, d))
            args.add((w, wp, ceil_g - 1))
            args.add((w, wp, p.weighted_degree - ceil_g))
    return args


def cross_check(cfg: CurveConfig) -> CheckReport:
    """Differential test of the engine on one configuration.

    Ordinary configs with incidence data are checked cell by cell against the
    reference program; other (weighted) configs fall back to the engine-only
    checks: lattice counts against the brute loop, smooth-cone coefficients
    against plain convolution, the column-sum identity, and (for reduced
    configs) the rows recomputed from the local spectra.
    """
    checks: list[CheckResult] = []
    table = curve_table(cfg)
    ordinary_path = cfg.is_ordinary() and cfg.incidence is not None

    if ordinary_path:
        ref = reference_ordinary(cfg)
        checks.append(_first_row_mismatch("rows-e0", table.rows[0],
                                          ref.rows[0], 0))
        checks.append(_first_row_mismatch("rows-e2", table.rows[2],
                                          ref.rows[2], 2))
        middle = ordinary_middle_row(cfg)
        checks.append(_first_row_mismatch("middle-incidence", middle,
                                          ref.rows[1], 1))
        checks.append(_first_row_mismatch("middle-balance", table.rows[1],
                                          middle, 1))
        checks.append(CheckResult(
            "chi", table.chi_u == ref.chi_u,
            f"expected={ref.chi_u}, actual={table.chi_u}"))
        ref_table = ConeSpectrumTable(ref.d, ref.dprime, ref.chi_u,
                                      (ref.rows[0], tuple(middle), ref.rows[2]))
        checks.append(CheckResult(
            "row-sum", ref_table.row_sums_ok(),
            "column sums disagree with chi(U)"))
    else:
        checks.append(CheckResult(
            "row-sum", table.row_sums_ok(),
            "column sums disagree with chi(U)"))
        if cfg.is_reduced():
            spectra = [p.local_spectrum() for p in cfg.points]
            node = SpectrumVector({Fraction(1): 1}, ambient_dim=2)
            spectra.extend([node] * cfg.nodes)
            alt = local_data_table(cfg.degree, spectra)
            checks.append(_first_row_mismatch("local-table-e0", table.rows[0],
                                              alt.rows[0], 0))
            checks.append(_first_row_mismatch("local-table-e2", table.rows[2],
                                              alt.rows[2], 2))
            checks.append(_first_row_mismatch("local-table-e1", table.rows[1],
                                              alt.rows[1], 1))

    bad = None
    for w, wp, bound in sorted(_touched_lattice_args(cfg)):
        if lattice_count(w, wp, bound) != brute_lattice(w, wp, bound):
            bad = (w, wp, bound)
            break
    checks.append(CheckResult(
        "lattice-counts", bad is None,
        f"first mismatch at (w,w',bound)={bad}" if bad else ""))

    dp = cfg.reduced_degree
    checks.append(CheckResult(
        "smooth-coeffs",
        smooth_cone_coeffs(dp, 2) == brute_coeffs(dp, 2),
        f"coefficient lists differ for degree {dp}"))

    return CheckReport(tuple(checks))


# ---------------------------------------------------------------------------
# randomized configurations for the differential suites
# ---------------------------------------------------------------------------

def random_ordinary_config(rng: random.Random,
                           max_components: int = 6,
                           max_degree: int = 4,
                           max_mult: int = 5,
                           max_points: int = 6,
                           max_branches: int = 8,
                           with_matrix: bool = False) -> CurveConfig:
    """Random ordinary configuration built like actual geometry: smooth
    components meeting transversally at the listed points, every remaining
    pairwise intersection closed off as an aggregated node, and a genus-
    bounded number of self-nodes per component. Branch multiplicities are
    always component multiplicities, and incidence data is the complete
    multiset implied by the construction.
    """
    r = rng.randint(1, max_components)
    comps = [GlobalComponent(rng.randint(1, max_degree), rng.randint(1, max_mult))
             for _ in range(r)]
    capacity = {(k, kp): comps[k].degree * comps[kp].degree
                for k in range(r) for kp in range(k + 1, r)}
    used = {pair: 0 for pair in capacity}
    self_budget = [binom2(c.degree - 1) for c in comps]

    point_rows: list[list[int]] = []
    for _ in range(rng.randint(0, max_points)):
        row = [0] * r
        size = rng.randint(2, min(max(r + 1, 2), max_branches))
        candidates = list(range(r))
        rng.shuffle(candidates)
        for k in candidates:
            if sum(row) >= size:
                break
            m = 1
            if (comps[k].degree >= 3 and self_budget[k] > 0
                    and sum(row) + 2 <= size and rng.random() < 0.3):
                m = 2
            ok = True
            for kp in range(r):
                if row[kp] and kp != k:
                    pair = (min(k, kp), max(k, kp))
                    if used[pair] + m * row[kp] > capacity[pair]:
                        ok = False
                        break
            if not ok:
                continue
            row[k] = m
            if m == 2:
                self_budget[k] -= 1
        if sum(row) < 2:
            continue
        for k in range(r):
            for kp in range(k + 1, r):
                if row[k] and row[kp]:
                    used[(k, kp)] += row[k] * row[kp]
        point_rows.append(row)

    leftover = sum(capacity[pair] - used[pair] for pair in capacity)
    self_rows: list[list[int]] = []
    for k in range(r):
        for _ in range(rng.randint(0, min(2, self_budget[k]))):
            row = [0] * r
            row[k] = 2
            self_rows.append(row)
            self_budget[k] -= 1

    points = []
    listed_rows = []
    aggregated_rows = []
    for row in point_rows:
        branches = []
        for k, m in enumerate(row):
            branches.extend([LocalBranch(1, comps[k].multiplicity)] * m)
        if len(branches) == 2 and rng.random() < 0.4:
            aggregated_rows.append(row)    # double point folded into the counter
            continue
        points.append(SingularPoint((1, 1), tuple(branches)))
        listed_rows.append(row)

    nodes = leftover + len(self_rows) + len(aggregated_rows)

    leftover_rows = []
    for pair, cap in capacity.items():
        for _ in range(cap - used[pair]):
            row = [0] * r
            row[pair[0]] = 1
            row[pair[1]] = 1
            leftover_rows.append(row)

    matrix_rows = listed_rows + aggregated_rows + self_rows + leftover_rows
    if with_matrix and matrix_rows:
        incidence = Incidence.from_matrix(matrix_rows)
    else:
        value_counts: dict[int, int] = {}
        for row in point_rows + self_rows + leftover_rows:
            for v in row:
                if v:
                    value_counts[v] = value_counts.get(v, 0) + 1
        pairs = tuple(sorted((c, v) for v, c in value_counts.items()))
        incidence = Incidence.from_pairs(pairs)

    return CurveConfig(components=tuple(comps), points=tuple(points),
                       nodes=nodes, incidence=incidence)


_SWH_WEIGHTS = ((1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5))


def random_swh_point(rng: random.Random,
                     multiplicity: int = 1) -> SingularPoint:
    """Random semi-weighted-homogeneous point with branch degrees drawn from
    {w, w', w*w'} (at most one branch each of degree w and w')."""
    while True:
        w, wp = _SWH_WEIGHTS[rng.randrange(len(_SWH_WEIGHTS))]
        branches = []
        if rng.random() < 0.5:
            branches.append(w)
        if rng.random() < 0.5:
            branches.append(wp)
        branches.extend([w * wp] * rng.randint(0, 2))
        degree = sum(branches)
        if len(branches) >= 1 and degree > max(w, wp):
            if (w, wp) == (1, 1) and degree < 2:
                continue
            return SingularPoint(
                (w, wp),
                tuple(LocalBranch(b, multiplicity) for b in branches))


def random_reduced_swh_config(rng: random.Random,
                              max_components: int = 4,
                              max_degree: int = 4,
                              max_points: int = 3) -> CurveConfig:
    """Random reduced configuration with semi-weighted-homogeneous points,
    for the thickening and bridge-identity suites."""
    r = rng.randint(1, max_components)
    comps = tuple(GlobalComponent(rng.randint(1, max_degree), 1)
                  for _ in range(r))
    points = tuple(random_swh_point(rng) for _ in range(rng.randint(0, max_points)))
    return CurveConfig(components=comps, points=points,
                       nodes=rng.randint(0, 3))


def thicken(cfg: CurveConfig, m: int) -> CurveConfig:
    """Raise a reduced configuration to constant multiplicity m."""
    if not cfg.is_reduced():
        raise ValueError("thicken expects a reduced configuration")
    comps = tuple(GlobalComponent(c.degree, m) for c in cfg.components)
    points = tuple(
        SingularPoint(p.weights,
                      tuple(LocalBranch(b.weighted_degree, m)
                            for b in p.branches))
        for p in cfg.points)
    return CurveConfig(components=comps, points=points, nodes=cfg.nodes,
                       incidence=cfg.incidence)


def as_reduced_cone(cfg: CurveConfig, power: int = 1) -> ReducedConeConfig:
    """View a reduced curve configuration as input for the reduced-cone
    route: local spectra from the weight data, one {1:1} per node."""
    if not cfg.is_reduced():
        raise ValueError("expected a reduced configuration")
    spectra = [p.local_spectrum() for p in cfg.points]
    node = SpectrumVector({Fraction(1): 1}, ambient_dim=2)
    spectra.extend([node] * cfg.nodes)
    return ReducedConeConfig(ambient_dim=2, degree=cfg.reduced_degree,
                             local_spectra=tuple(spectra), power=power)
