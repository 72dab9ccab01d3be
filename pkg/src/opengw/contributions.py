"""Contributions of degree-one covers of a disk to open invariants of type ``(g, h)``.

With ``m`` the half normal Maslov index of the disk (``-1`` for an embedded
disk against a Maslov-class-zero Lagrangian), the contribution is

    C(g, 1) = sum over closed-only partitions lam of g of
              (1/|Aut(lam)|) * prod_i (m * alpha_{g_i}),
    C(g, h) = 0 for h > 1,

and the generating function sum_g C(g, 1) t^{2g} is (sin(t/2)/(t/2))^{-1}.
The one-ghost numbers ``alpha_g`` are read off from that identity, since the
sum over multisets with 1/|Aut| weights is the exponential of the one-ghost
series: ``m * alpha_g = -[t^{2g}] log(sin(t/2)/(t/2))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator

from .exact import (
    PowerSeries,
    RationalLike,
    format_rational,
    parse_rational,
    rational,
    series_inv,
    series_log,
    sin_half_series,
)
from .moduli import maslov_factor
from .partitions import GhostPartition, automorphism_order, enumerate_partitions

__all__ = [
    "ZeroMaslovFactor",
    "DEFAULT_M",
    "ContributionTable",
    "alpha_coefficients",
    "contribution",
    "contribution_ordered",
    "compositions",
    "gf_series",
    "verify_generating_function",
    "special_case_11",
    "build_table",
]

DEFAULT_M = maslov_factor()


class ZeroMaslovFactor(ValueError):
    pass


def alpha_coefficients(max_g: int, m: RationalLike = DEFAULT_M) -> dict[int, Fraction]:
    """``{g: alpha_g}`` for ``1 <= g <= max_g``."""
    m = rational(m)
    if m == 0:
        raise ZeroMaslovFactor("alpha_g is undefined for m = 0")
    if max_g < 0:
        raise ValueError("max_g must be nonnegative")
    logs = series_log(sin_half_series(2 * max_g))
    return {g: -logs[2 * g] / m for g in range(1, max_g + 1)}


def _closed_partitions(g: int) -> list[GhostPartition]:
    return [lam for lam in enumerate_partitions(g, 1) if lam.closed_only]


def contribution(g: int, h: int, m: RationalLike = DEFAULT_M) -> Fraction:
    """``C(g, h)`` as an exact rational."""
    if g < 0 or h < 1:
        raise ValueError("need g >= 0 and h >= 1")
    if h > 1:
        return Fraction(0)
    if g == 0:
        return Fraction(1)
    m = rational(m)
    alpha = alpha_coefficients(g, m)
    total = Fraction(0)
    for lam in _closed_partitions(g):
        total += prod((m * alpha[x] for x in lam.closed), start=Fraction(1)) / automorphism_order(lam)
    return total


def compositions(g: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``g``."""
    if g == 0:
        yield ()
        return
    for first in range(1, g + 1):
        for rest in compositions(g - first):
            yield (first,) + rest


def contribution_ordered(g: int, m: RationalLike = DEFAULT_M, length: int | None = None) -> Fraction:
    """Contribution with ordered ghost branches; optionally only ``length`` branches."""
    if g < 1:
        raise ValueError("ordered contribution needs g >= 1")
    m = rational(m)
    alpha = alpha_coefficients(g, m)
    total = Fraction(0)
    for comp in compositions(g):
        if length is None or len(comp) == length:
            total += prod((m * alpha[x] for x in comp), start=Fraction(1))
    return total


def gf_series(max_g: int) -> PowerSeries:
    """``(sin(t/2)/(t/2))^{-1}`` through ``t^{2 max_g}``."""
    return series_inv(sin_half_series(2 * max_g))


def verify_generating_function(max_g: int, m: RationalLike = DEFAULT_M) -> bool:
    gf = gf_series(max_g)
    return all(contribution(g, 1, m) == gf[2 * g] for g in range(max_g + 1))


def special_case_11(m: RationalLike = DEFAULT_M) -> Fraction:
    """``C(1, 1) = m * alpha_1``; in geometric terms half the tangent Maslov
    index of the disk times the Euler number of the genus-one Hodge bundle."""
    m = rational(m)
    return m * alpha_coefficients(1, m)[1]


@dataclass(frozen=True)
class ContributionTable:
    m: Fraction
    alpha: dict[int, Fraction]
    contrib: dict[int, Fraction]
    max_genus: int

    def to_json(self) -> dict:
        return {
            "m": format_rational(self.m),
            "alpha": {str(g): format_rational(a) for g, a in sorted(self.alpha.items())},
            "contrib": {str(g): format_rational(c) for g, c in sorted(self.contrib.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, d: dict) -> ContributionTable:
        contrib = {int(g): parse_rational(c) for g, c in d["contrib"].items()}
        return cls(
            parse_rational(d["m"]),
            {int(g): parse_rational(a) for g, a in d["alpha"].items()},
            contrib,
            max(contrib),
        )


def build_table(max_g: int, m: RationalLike = DEFAULT_M) -> ContributionTable:
    m = rational(m)
    alpha = alpha_coefficients(max_g, m)
    contrib = {g: contribution(g, 1, m) for g in range(max_g + 1)}
    return ContributionTable(m, alpha, contrib, max_g)
