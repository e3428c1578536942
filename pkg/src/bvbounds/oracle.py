"""Brute-force ground truth and randomized property validation.

Everything here works directly on pmfs and event systems by exact
summation, never through the moment machinery, so a disagreement between
this module and the transform/bound formulas is a genuine bug on the
formula side.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from . import bounds as bnd
from . import model, transforms
from .combinatorics import DomainError, binom
from .model import EventSystem, JointPMF
from .transforms import TailTable

WEIGHT_GRANULARITY = 16

KINDS = ("dense_pmf", "sparse_pmf", "event_system")


@dataclass(frozen=True)
class InstanceSpec:
    """Seeded recipe for one random instance; identical specs always
    regenerate identical instances."""

    seed: int
    m: int
    n: int
    kind: str = "dense_pmf"
    atoms: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown instance kind {self.kind!r}")
        if self.m < 1 or self.n < 1:
            raise DomainError("instance dimensions must be >= 1")
        if self.kind == "event_system" and (self.atoms is None or self.atoms < 1):
            raise DomainError("event_system instances need atoms >= 1")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "m": self.m,
            "n": self.n,
            "kind": self.kind,
            "atoms": self.atoms,
        }


@dataclass
class Failure:
    spec: InstanceSpec
    property_id: str
    params: Dict[str, int]
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "property": self.property_id,
            "params": dict(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass
class ValidationReport:
    trials: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_seconds": self.elapsed,
        }


def random_instance(spec: InstanceSpec) -> Union[JointPMF, EventSystem]:
    """Deterministic random instance: integer weights 0..16 normalized
    exactly to rationals."""
    rng = random.Random(spec.seed)
    if spec.kind == "event_system":
        return _random_event_system(rng, spec.m, spec.n, spec.atoms)
    sparse = spec.kind == "sparse_pmf"
    while True:
        w = [
            [rng.randint(0, WEIGHT_GRANULARITY) for _ in range(spec.n + 1)]
            for _ in range(spec.m + 1)
        ]
        if sparse:
            for u in range(spec.m + 1):
                for v in range(spec.n + 1):
                    if rng.random() < 0.5:
                        w[u][v] = 0
        total = sum(map(sum, w))
        if total:
            break
    p = [[Fraction(x, total) for x in row] for row in w]
    return JointPMF(spec.m, spec.n, p)


def _random_event_system(rng, m: int, n: int, count: int) -> EventSystem:
    while True:
        weights = [rng.randint(0, WEIGHT_GRANULARITY) for _ in range(count)]
        total = sum(weights)
        if total:
            break
    atoms = []
    for w in weights:
        a = tuple(rng.randint(0, 1) for _ in range(m))
        b = tuple(rng.randint(0, 1) for _ in range(n))
        if w:
            atoms.append((Fraction(w, total), a, b))
    return EventSystem(m, n, atoms)


def exact_tail(pmf: JointPMF, u: int, v: int) -> Fraction:
    """Suffix sum P(S>=u, T>=v) straight from the pmf."""
    if not (0 <= u <= pmf.m and 0 <= v <= pmf.n):
        raise DomainError("tail indices out of range")
    return Fraction(sum(
        pmf.p[i][j]
        for i in range(u, pmf.m + 1)
        for j in range(v, pmf.n + 1)
    ))


def tail_table_from_pmf(pmf: JointPMF) -> TailTable:
    """Full tail grid by suffix summation; independent of the moment route."""
    q = [
        [exact_tail(pmf, u, v) for v in range(pmf.n + 1)]
        for u in range(pmf.m + 1)
    ]
    return TailTable(pmf.m, pmf.n, q)


# ---------------------------------------------------------------------------
# property suite


class _Recorder:
    def __init__(self, spec: InstanceSpec, report: ValidationReport):
        self.spec = spec
        self.report = report

    def check(self, prop: str, params: Dict[str, int], lhs, rhs) -> None:
        if lhs != rhs:
            self.report.failures.append(
                Failure(self.spec, prop, params, Fraction(lhs), Fraction(rhs))
            )

    def check_le(self, prop: str, params: Dict[str, int], lhs, rhs) -> None:
        if lhs > rhs:
            self.report.failures.append(
                Failure(self.spec, prop, params, Fraction(lhs), Fraction(rhs))
            )


def _prop_theorem1_roundtrip(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    for u in range(pmf.m + 1):
        for v in range(pmf.n + 1):
            rec.check(
                "theorem1_roundtrip",
                {"u": u, "v": v},
                transforms.pmf_from_moments(mm, u, v),
                pmf.p[u][v],
            )


def _prop_theorem2_roundtrip(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    tt = tail_table_from_pmf(pmf)
    for u in range(pmf.m + 1):
        for v in range(pmf.n + 1):
            rec.check(
                "theorem2_tails",
                {"u": u, "v": v},
                transforms.tails_from_moments(mm, u, v),
                tt.q[u][v],
            )
    for i in range(pmf.m + 1):
        for j in range(pmf.n + 1):
            rec.check(
                "theorem2_moments",
                {"i": i, "j": j},
                transforms.moments_from_tails(tt, i, j),
                mm.s[i][j],
            )


def _prop_pgf_identity(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    grid = [Fraction(-1), Fraction(1, 2), Fraction(2)]
    for t in grid:
        for s in grid:
            rec.check(
                "pgf_identity",
                {"t_num": t.numerator, "t_den": t.denominator,
                 "s_num": s.numerator, "s_den": s.denominator},
                transforms.pgf_eval(pmf, 1 + t, 1 + s),
                transforms.moment_poly_eval(mm, t, s),
            )


def _prop_event_roundtrip(pmf: JointPMF, rec: _Recorder) -> None:
    back = model.counting_pmf(model.event_system_from_pmf(pmf))
    for u in range(pmf.m + 1):
        for v in range(pmf.n + 1):
            rec.check(
                "event_roundtrip", {"u": u, "v": v}, back.p[u][v], pmf.p[u][v]
            )


def _prop_moment_bounds(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    rec.check("moment_bounds", {"i": 0, "j": 0}, mm.s[0][0], Fraction(1))
    for i in range(pmf.m + 1):
        for j in range(pmf.n + 1):
            rec.check_le("moment_bounds", {"i": i, "j": j}, 0, mm.s[i][j])
            rec.check_le(
                "moment_bounds",
                {"i": i, "j": j},
                mm.s[i][j],
                binom(pmf.m, i) * binom(pmf.n, j),
            )


def _prop_complementary_expansion(pmf: JointPMF, rec: _Recorder) -> None:
    # linear-in-moments form of the complementary moments vs direct
    # expectations over the pmf, bivariate and univariate
    mm = model.moments_from_pmf(pmf)
    m, n = pmf.m, pmf.n
    cells = [
        (u, v, pmf.p[u][v])
        for u in range(m + 1)
        for v in range(n + 1)
        if pmf.p[u][v]
    ]
    for l in range(n + 1):
        direct = sum(binom(n - v, l) * p for _, v, p in cells)
        linear = sum(
            (-1) ** r * binom(n - r, l - r) * mm.s[0][r] for r in range(l + 1)
        )
        rec.check("complementary_univariate", {"l": l}, linear, direct)
    for k in range(1, m + 1):
        for l in range(1, n + 1):
            e_a = sum(binom(m - u, k) * p for u, _, p in cells)
            e_b = sum(binom(n - v, l) * p for _, v, p in cells)
            e_ab = sum(
                binom(m - u, k) * binom(n - v, l) * p for u, v, p in cells
            )
            direct = binom(m, k) * e_b + binom(n, l) * e_a - e_ab
            rec.check(
                "complementary_bivariate",
                {"k": k, "l": l},
                transforms.complementary_moment(mm, k, l),
                direct,
            )


def _prop_gumbel_identity(es: EventSystem, rec: _Recorder) -> None:
    sums = model.bonferroni_sums(es, es.m, es.n)
    mm = model.moments_from_pmf(model.counting_pmf(es))
    for k in range(es.m + 1):
        for l in range(es.n + 1):
            rec.check(
                "gumbel_identity", {"k": k, "l": l}, sums.s[k][l], mm.s[k][l]
            )


def _prop_sandwich_bonferroni(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    for u in range(1, pmf.m + 1):
        for v in range(1, pmf.n + 1):
            tail = exact_tail(pmf, u, v)
            kmax = (pmf.m + pmf.n - u - v) // 2 + 1
            for k in range(kmax + 1):
                lo, up = bnd.bonferroni_pair(mm, u, v, k)
                p = {"u": u, "v": v, "k": k}
                rec.check_le("sandwich_bonferroni_lower", p, lo.value, tail)
                rec.check_le("sandwich_bonferroni_upper", p, tail, up.value)


def _prop_sandwich_frechet_gumbel(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    tail = exact_tail(pmf, 1, 1)
    for k in range(1, pmf.m + 1):
        for l in range(1, pmf.n + 1):
            p = {"k": k, "l": l}
            rec.check_le(
                "sandwich_frechet", p, bnd.frechet_lower(mm, k, l).value, tail
            )
            rec.check_le(
                "sandwich_gumbel", p, tail, bnd.gumbel_upper(mm, k, l).value
            )


def _prop_sandwich_type(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    for s in range(1, pmf.m + 1):
        for t in range(1, pmf.n + 1):
            tail = exact_tail(pmf, s, t)
            for k in range(1, pmf.m + 1):
                for l in range(1, pmf.n + 1):
                    lo, up = bnd.frechet_gumbel_type(mm, s, t, k, l)
                    p = {"s": s, "t": t, "k": k, "l": l}
                    if lo.defined:
                        rec.check_le("sandwich_frechet_type", p, lo.value, tail)
                    if up.defined:
                        rec.check_le("sandwich_gumbel_type", p, tail, up.value)


def _prop_sandwich_chung(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    for s in range(1, pmf.m + 1):
        for t in range(1, pmf.n + 1):
            tail = exact_tail(pmf, s, t)
            for k in range(s, pmf.m + 1):
                for l in range(t, pmf.n + 1):
                    a = bnd.chung_bound(mm, s, t, k, l)
                    rec.check_le(
                        "sandwich_chung",
                        {"s": s, "t": t, "k": k, "l": l},
                        tail,
                        a.value,
                    )


def _prop_sandwich_comparison(pmf: JointPMF, rec: _Recorder) -> None:
    if pmf.m < 2 or pmf.n < 2:
        return
    mm = model.moments_from_pmf(pmf)
    tail = exact_tail(pmf, 1, 1)
    rec.check_le(
        "sandwich_c1", {}, tail, bnd.comparison_bound(mm, "c1").value
    )
    rec.check_le(
        "sandwich_c6", {}, tail, bnd.comparison_bound(mm, "c6").value
    )
    a_lo = max(1, -(-(pmf.m - 1) // 2))  # smallest a with m - 2a - 1 <= 0
    b_lo = max(1, -(-(pmf.n - 1) // 2))
    for a in range(a_lo, pmf.m + 1):
        for b in range(b_lo, pmf.n + 1):
            val = bnd.comparison_bound(mm, "c3", a, b).value
            rec.check_le("sandwich_c3", {"a": a, "b": b}, val, tail)


def _prop_frechet_shape(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    f = [
        [bnd.frechet_lower(mm, k, l).value for l in range(1, pmf.n + 1)]
        for k in range(1, pmf.m + 1)
    ]
    for ki in range(len(f)):
        for li in range(len(f[0])):
            p = {"k": ki + 1, "l": li + 1}
            if ki + 1 < len(f):
                rec.check_le("frechet_monotone_k", p, f[ki][li], f[ki + 1][li])
            if li + 1 < len(f[0]):
                rec.check_le("frechet_monotone_l", p, f[ki][li], f[ki][li + 1])
            if ki + 2 < len(f):
                rec.check_le(
                    "frechet_concave_k",
                    p,
                    f[ki + 2][li] - 2 * f[ki + 1][li] + f[ki][li],
                    0,
                )
            if li + 2 < len(f[0]):
                rec.check_le(
                    "frechet_concave_l",
                    p,
                    f[ki][li + 2] - 2 * f[ki][li + 1] + f[ki][li],
                    0,
                )


def _prop_gumbel_shape(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    g = [
        [bnd.gumbel_upper(mm, k, l).value for l in range(1, pmf.n + 1)]
        for k in range(1, pmf.m + 1)
    ]
    for ki in range(len(g)):
        for li in range(len(g[0])):
            p = {"k": ki + 1, "l": li + 1}
            if ki + 1 < len(g):
                rec.check_le("gumbel_monotone_k", p, g[ki + 1][li], g[ki][li])
            if li + 1 < len(g[0]):
                rec.check_le("gumbel_monotone_l", p, g[ki][li + 1], g[ki][li])
            if ki + 2 < len(g):
                rec.check_le(
                    "gumbel_convex_k",
                    p,
                    0,
                    g[ki + 2][li] - 2 * g[ki + 1][li] + g[ki][li],
                )
            if li + 2 < len(g[0]):
                rec.check_le(
                    "gumbel_convex_l",
                    p,
                    0,
                    g[ki][li + 2] - 2 * g[ki][li + 1] + g[ki][li],
                )


def _prop_chung_shape(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    m, n = pmf.m, pmf.n
    for s in range(1, m + 1):
        for t in range(1, n + 1):
            a = {
                (k, l): bnd.chung_bound(mm, s, t, k, l).value
                for k in range(s, m + 1)
                for l in range(t, n + 1)
            }
            for (k, l), val in a.items():
                p = {"s": s, "t": t, "k": k, "l": l}
                if k + 1 <= m:
                    rec.check_le("chung_monotone_k", p, a[(k + 1, l)], val)
                if l + 1 <= n:
                    rec.check_le("chung_monotone_l", p, a[(k, l + 1)], val)
                if k + 2 <= m:
                    rec.check_le(
                        "chung_convex_k",
                        p,
                        0,
                        a[(k + 2, l)] - 2 * a[(k + 1, l)] + val,
                    )
                if l + 2 <= n:
                    rec.check_le(
                        "chung_convex_l",
                        p,
                        0,
                        a[(k, l + 2)] - 2 * a[(k, l + 1)] + val,
                    )
                if k + 1 <= m and s < m:
                    rec.check(
                        "chung_recursion",
                        p,
                        val - a[(k + 1, l)],
                        Fraction(s, m - s)
                        * bnd.chung_bound(mm, s + 1, t, k + 1, l).value,
                    )


def _prop_anchors(pmf: JointPMF, rec: _Recorder) -> None:
    mm = model.moments_from_pmf(pmf)
    m, n = pmf.m, pmf.n
    rec.check(
        "anchor_frechet_full",
        {"k": m, "l": n},
        bnd.frechet_lower(mm, m, n).value,
        exact_tail(pmf, 1, 1),
    )
    rec.check(
        "anchor_gumbel_11",
        {"k": 1, "l": 1},
        bnd.gumbel_upper(mm, 1, 1).value,
        mm.s[1][1],
    )
    for s in range(1, m + 1):
        for t in range(1, n + 1):
            tail = exact_tail(pmf, s, t)
            rec.check(
                "anchor_chung_full",
                {"s": s, "t": t},
                bnd.chung_bound(mm, s, t, m, n).value,
                tail,
            )
            k_full = (m + n - s - t) // 2 + 1
            lo, up = bnd.bonferroni_pair(mm, s, t, k_full)
            rec.check("anchor_bonferroni_full_lower", {"s": s, "t": t},
                      lo.value, tail)
            rec.check("anchor_bonferroni_full_upper", {"s": s, "t": t},
                      up.value, tail)
    if m >= 2 and n >= 2:
        rec.check(
            "anchor_c4",
            {"a": m - 1, "b": n - 1},
            bnd.comparison_bound(mm, "c3", m - 1, n - 1).value,
            bnd.frechet_lower(mm, 2, 2).value,
        )


_PMF_PROPERTIES: Dict[str, Callable[[JointPMF, _Recorder], None]] = {
    "theorem1_roundtrip": _prop_theorem1_roundtrip,
    "theorem2_roundtrip": _prop_theorem2_roundtrip,
    "pgf_identity": _prop_pgf_identity,
    "event_roundtrip": _prop_event_roundtrip,
    "moment_bounds": _prop_moment_bounds,
    "complementary_expansion": _prop_complementary_expansion,
    "sandwich_bonferroni": _prop_sandwich_bonferroni,
    "sandwich_frechet_gumbel": _prop_sandwich_frechet_gumbel,
    "sandwich_type": _prop_sandwich_type,
    "sandwich_chung": _prop_sandwich_chung,
    "sandwich_comparison": _prop_sandwich_comparison,
    "frechet_shape": _prop_frechet_shape,
    "gumbel_shape": _prop_gumbel_shape,
    "chung_shape": _prop_chung_shape,
    "anchors": _prop_anchors,
}

_ES_PROPERTIES: Dict[str, Callable[[EventSystem, _Recorder], None]] = {
    "gumbel_identity": _prop_gumbel_identity,
}

ALL_PROPERTIES = tuple(_PMF_PROPERTIES) + tuple(_ES_PROPERTIES)


def validate(
    specs: Iterable[InstanceSpec],
    properties: Optional[Iterable[str]] = None,
) -> ValidationReport:
    """Run the selected property suites on each instance, recording exact
    violations as data rather than raising."""
    selected = tuple(properties) if properties is not None else ALL_PROPERTIES
    for prop in selected:
        if prop not in _PMF_PROPERTIES and prop not in _ES_PROPERTIES:
            raise DomainError(f"unknown property id {prop!r}")
    report = ValidationReport()
    start = time.perf_counter()
    for spec in specs:
        instance = random_instance(spec)
        rec = _Recorder(spec, report)
        report.trials += 1
        if isinstance(instance, EventSystem):
            for prop in selected:
                if prop in _ES_PROPERTIES:
                    _ES_PROPERTIES[prop](instance, rec)
            pmf = model.counting_pmf(instance)
        else:
            pmf = instance
        for prop in selected:
            if prop in _PMF_PROPERTIES:
                _PMF_PROPERTIES[prop](pmf, rec)
    report.elapsed = time.perf_counter() - start
    return report
