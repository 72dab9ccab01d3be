"""Ghost partitions of a bordered type ``(g, h)`` and the ranks attached to each cell.

A partition distributes genus and boundary components over ghost branches
attached to the disk: closed ghosts of genus ``g_i >= 1`` at interior points,
open ghosts of type ``(g_i, h_i)`` with ``2 g_i + h_i - 1 >= 1`` along the
boundary, subject to

    g = sum(closed g_i) + sum(open g_i)
    h = 1 + sum(open (h_i - 1)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .moduli import closed_type, moduli_dim, open_type

__all__ = [
    "GhostPartition",
    "CellSummary",
    "enumerate_partitions",
    "automorphism_order",
    "ordering_count",
    "cell_dimension",
    "cell_summary",
]


@dataclass(frozen=True, order=True)
class GhostPartition:
    """Unordered partition; both multisets are kept sorted descending."""

    target: tuple[int, int]
    closed: tuple[int, ...] = ()
    open: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        g, h = self.target
        closed = tuple(sorted((int(x) for x in self.closed), reverse=True))
        opens = tuple(sorted(((int(a), int(b)) for a, b in self.open), reverse=True))
        object.__setattr__(self, "target", (int(g), int(h)))
        object.__setattr__(self, "closed", closed)
        object.__setattr__(self, "open", opens)
        if h < 1:
            raise ValueError("target must have at least one boundary component")
        if any(x < 1 for x in closed):
            raise ValueError(f"closed ghosts need genus >= 1: {closed}")
        if any(a < 0 or b < 1 or 2 * a + b - 1 < 1 for a, b in opens):
            raise ValueError(f"unstable open ghost in {opens}")
        if sum(closed) + sum(a for a, _ in opens) != g:
            raise ValueError(f"ghost genera do not add up to {g}")
        if 1 + sum(b - 1 for _, b in opens) != h:
            raise ValueError(f"ghost boundaries do not add up to {h}")

    @property
    def r(self) -> int:
        return len(self.closed)

    @property
    def q(self) -> int:
        return len(self.open)

    @property
    def double_genus(self) -> int:
        g, h = self.target
        return 2 * g + h - 1

    @property
    def closed_only(self) -> bool:
        return not self.open

    def to_json(self) -> dict:
        return {
            "closed": list(self.closed),
            "open": [list(p) for p in self.open],
            "target": list(self.target),
        }

    @classmethod
    def from_json(cls, d: dict) -> GhostPartition:
        return cls(tuple(d["target"]), tuple(d["closed"]), tuple(tuple(p) for p in d["open"]))

    def __str__(self) -> str:
        parts = [str(x) for x in self.closed] + [f"({a},{b})" for a, b in self.open]
        return "(" + ", ".join(parts) + ")"


@lru_cache(maxsize=None)
def _ghost_types(g: int, excess: int) -> tuple[tuple, ...]:
    """All ghost types fitting in genus ``g`` and boundary excess ``excess``.

    Each is ``(kind, genus, h)`` with kind 0 closed, 1 open, sorted descending.
    """
    types = [(0, a, 0) for a in range(1, g + 1)]
    for a in range(g + 1):
        for b in range(1, excess + 2):
            if 2 * a + b - 1 >= 1:
                types.append((1, a, b))
    return tuple(sorted(types, reverse=True))


def _weight(t: tuple) -> tuple[int, int]:
    kind, a, b = t
    return (a, 0) if kind == 0 else (a, b - 1)


@lru_cache(maxsize=None)
def _multisets(g: int, excess: int, start: int, types: tuple) -> tuple[tuple, ...]:
    """Multisets of ``types[start:]`` with total weight ``(g, excess)``."""
    if g == 0 and excess == 0:
        return ((),)
    out = []
    for i in range(start, len(types)):
        wg, we = _weight(types[i])
        if wg <= g and we <= excess:
            for rest in _multisets(g - wg, excess - we, i, types):
                out.append((types[i],) + rest)
    return tuple(out)


def enumerate_partitions(g: int, h: int) -> list[GhostPartition]:
    """Every unordered ghost partition of ``(g, h)``, deterministically ordered.

    Order: by number of open ghosts, then closed genera and open pairs
    (each descending) in reverse lexicographic order.
    """
    if g < 0 or h < 1:
        raise ValueError("need g >= 0 and h >= 1")
    types = _ghost_types(g, h - 1)
    result = []
    for ms in _multisets(g, h - 1, 0, types):
        closed = [a for k, a, _ in ms if k == 0]
        opens = [(a, b) for k, a, b in ms if k == 1]
        result.append(GhostPartition((g, h), tuple(closed), tuple(opens)))
    result.sort(key=lambda lam: (lam.q, tuple(-x for x in lam.closed), tuple((-a, -b) for a, b in lam.open)))
    return result


def automorphism_order(lam: GhostPartition) -> int:
    """Order of the group permuting identical ghost branches."""
    counts = list(Counter(lam.closed).values()) + list(Counter(lam.open).values())
    return prod(factorial(c) for c in counts)


def ordering_count(lam: GhostPartition) -> int:
    """Number of distinct orderings of the branches: ``(r+q)! / |Aut|``."""
    return factorial(lam.r + lam.q) // automorphism_order(lam)


def _closed_factor_dim(gi: int) -> int:
    # attachment point on the disk interior, plus the one-pointed ghost
    return 2 + moduli_dim(closed_type(gi, 1))


def _open_factor_dim(gi: int, hi: int) -> int:
    m = (1,) + (0,) * (hi - 1)
    return 1 + moduli_dim(open_type(gi, hi, 0, m))


def cell_dimension(lam: GhostPartition) -> int:
    """Real dimension of the cell: sum over ghost factors, equal to ``3 g~ - (2r + q)``."""
    d = sum(_closed_factor_dim(x) for x in lam.closed) + sum(_open_factor_dim(a, b) for a, b in lam.open)
    expected = 3 * lam.double_genus - (2 * lam.r + lam.q)
    if d != expected:
        raise AssertionError(f"cell dimension mismatch for {lam}: {d} != {expected}")
    return d


@dataclass(frozen=True)
class CellSummary:
    partition: GhostPartition
    dim: int
    ob_rank: int
    gluing_rank: int
    obF_rank: int

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "dim": self.dim,
            "ob_rank": self.ob_rank,
            "gluing_rank": self.gluing_rank,
            "obF_rank": self.obF_rank,
        }


def cell_summary(lam: GhostPartition) -> CellSummary:
    """Real ranks of the obstruction and gluing bundles over the cell.

    Closed ghosts contribute ``TM (x) E_g^*`` (real rank ``6 g_i``), open
    ghosts ``TL (x) E_{g,h}^*`` (real rank ``3 (2 g_i + h_i - 1)``).
    """
    ob = sum(6 * x for x in lam.closed) + sum(3 * (2 * a + b - 1) for a, b in lam.open)
    if ob != 3 * lam.double_genus:
        raise AssertionError(f"obstruction rank {ob} != 3 g~ for {lam}")
    glue = 2 * lam.r + lam.q
    return CellSummary(lam, cell_dimension(lam), ob, glue, ob - glue)
