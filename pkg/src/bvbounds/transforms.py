"""Exact conversions between the pmf/tail and moment representations of a
pair of bounded counting variables.

The moment grid determines the joint law: the pmf comes back by an
alternating double sum, the upper-orthant tails by the inversion pair

    P(S>=u, T>=v) = sum_{i>=u, j>=v} (-1)^(i+j-u-v) C(i-1,u-1) C(j-1,v-1) s[i][j]
    s[i][j]       = sum_{u>=i, v>=j} C(u-1,i-1) C(v-1,j-1) P(S>=u, T>=v)

valid for u, v >= 1.  Boundary indices (u = 0 or v = 0) reduce to the
univariate versions on the marginals, since P(S>=0, T>=v) = P(T>=v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .combinatorics import DomainError, Rational, binom
from .model import Grid, JointPMF, MomentMatrix, _freeze_grid


@dataclass(frozen=True)
class TailTable:
    """Grid of upper-orthant tail probabilities q[u][v] = P(S>=u, T>=v)."""

    m: int
    n: int
    q: Grid

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError("TailTable requires m >= 1 and n >= 1")
        object.__setattr__(
            self, "q", _freeze_grid(self.q, self.m, self.n, "tail")
        )


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not (lo <= value <= hi):
        raise DomainError(f"{name}={value} outside [{lo}, {hi}]")


def pmf_from_moments(mm: MomentMatrix, u: int, v: int) -> Fraction:
    """P(S=u, T=v) recovered from the moment grid."""
    _check_range("u", u, 0, mm.m)
    _check_range("v", v, 0, mm.n)
    total = Fraction(0)
    for i in range(u, mm.m + 1):
        for j in range(v, mm.n + 1):
            total += (
                (-1) ** (i + j - u - v) * binom(i, u) * binom(j, v) * mm.s[i][j]
            )
    return total


def tails_from_moments(mm: MomentMatrix, u: int, v: int) -> Fraction:
    """P(S>=u, T>=v) recovered from the moment grid.

    u = 0 or v = 0 reduce to the univariate marginal inversion; the
    bivariate coefficient C(i-1, u-1) is only meaningful for u >= 1.
    """
    _check_range("u", u, 0, mm.m)
    _check_range("v", v, 0, mm.n)
    if u == 0 and v == 0:
        return Fraction(1)
    if u == 0:
        return Fraction(sum(
            (-1) ** (j - v) * binom(j - 1, v - 1) * mm.s[0][j]
            for j in range(v, mm.n + 1)
        ))
    if v == 0:
        return Fraction(sum(
            (-1) ** (i - u) * binom(i - 1, u - 1) * mm.s[i][0]
            for i in range(u, mm.m + 1)
        ))
    total = Fraction(0)
    for i in range(u, mm.m + 1):
        for j in range(v, mm.n + 1):
            total += (
                (-1) ** (i + j - u - v)
                * binom(i - 1, u - 1)
                * binom(j - 1, v - 1)
                * mm.s[i][j]
            )
    return total


def tail_table_from_moments(mm: MomentMatrix) -> TailTable:
    q = [
        [tails_from_moments(mm, u, v) for v in range(mm.n + 1)]
        for u in range(mm.m + 1)
    ]
    return TailTable(mm.m, mm.n, q)


def moments_from_tails(tt: TailTable, i: int, j: int) -> Fraction:
    """Binomial moment s[i][j] recovered from the tail grid; inverse of
    tails_from_moments.  i = 0 or j = 0 use the univariate marginal form."""
    _check_range("i", i, 0, tt.m)
    _check_range("j", j, 0, tt.n)
    if i == 0 and j == 0:
        return Fraction(1)
    if i == 0:
        return Fraction(sum(
            binom(v - 1, j - 1) * tt.q[0][v] for v in range(j, tt.n + 1)
        ))
    if j == 0:
        return Fraction(sum(
            binom(u - 1, i - 1) * tt.q[u][0] for u in range(i, tt.m + 1)
        ))
    total = Fraction(0)
    for u in range(i, tt.m + 1):
        for v in range(j, tt.n + 1):
            total += binom(u - 1, i - 1) * binom(v - 1, j - 1) * tt.q[u][v]
    return total


def pgf_eval(pmf: JointPMF, t: Rational, s: Rational) -> Fraction:
    """Ordinary bivariate probability generating function at (t, s)."""
    t, s = Fraction(t), Fraction(s)
    return Fraction(sum(
        pmf.p[u][v] * t**u * s**v
        for u in range(pmf.m + 1)
        for v in range(pmf.n + 1)
    ))


def moment_poly_eval(mm: MomentMatrix, t: Rational, s: Rational) -> Fraction:
    """The moment polynomial sum_{i,j} s[i][j] t^i s^j."""
    t, s = Fraction(t), Fraction(s)
    return Fraction(sum(
        mm.s[i][j] * t**i * s**j
        for i in range(mm.m + 1)
        for j in range(mm.n + 1)
    ))


def pgf_identity_holds(
    pmf: JointPMF, mm: MomentMatrix, t: Rational, s: Rational
) -> bool:
    """Whether pgf(1+t, 1+s) equals the moment polynomial at (t, s); an
    exact identity when mm holds the moments of pmf."""
    return pgf_eval(pmf, 1 + Fraction(t), 1 + Fraction(s)) == moment_poly_eval(
        mm, t, s
    )


def complementary_moment(mm: MomentMatrix, k: int, l: int) -> Fraction:
    """The complementary moment

        C(m,k) E C(n-T,l) + C(n,l) E C(m-S,k) - E C(m-S,k) C(n-T,l)

    expressed as a linear combination of the moment grid."""
    _check_range("k", k, 1, mm.m)
    _check_range("l", l, 1, mm.n)
    acc = Fraction(binom(mm.m, k) * binom(mm.n, l))
    for s_ in range(1, k + 1):
        for r in range(1, l + 1):
            acc -= (
                (-1) ** (s_ + r)
                * binom(mm.m - s_, k - s_)
                * binom(mm.n - r, l - r)
                * mm.s[s_][r]
            )
    return acc
