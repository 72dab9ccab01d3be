"""Dimensions of moduli of domains, Riemann-Roch indices and Maslov indices.

Open types are written ``((g, h), n, m)`` with ``m`` the per-boundary mark
counts; closed types have ``h == 0`` and empty ``m``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import mpmath

__all__ = [
    "TopologicalType",
    "UnstableType",
    "ClosedType",
    "FrameError",
    "DegenerateFrame",
    "UndersampledLoop",
    "FrameLoop",
    "closed_type",
    "open_type",
    "moduli_dim",
    "double_genus",
    "riemann_roch_index",
    "maslov_index",
    "direct_sum",
    "disk_boundary_tangent_loop",
    "phase_loop",
    "DISK_TANGENT_MASLOV",
    "TOTAL_MASLOV",
    "normal_maslov",
    "maslov_factor",
]


class UnstableType(ValueError):
    pass


class ClosedType(ValueError):
    pass


class FrameError(ValueError):
    pass


class DegenerateFrame(FrameError):
    pass


class UndersampledLoop(FrameError):
    pass


@dataclass(frozen=True)
class TopologicalType:
    g: int
    h: int = 0
    n: int = 0
    m: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if min(self.g, self.h, self.n) < 0 or any(x < 0 for x in self.m):
            raise ValueError(f"negative entry in {self!r}")
        if len(self.m) != self.h:
            raise ValueError(f"need one boundary mark count per boundary component, got {self.m} for h={self.h}")

    @property
    def is_closed(self) -> bool:
        return self.h == 0

    def _dim_formula(self) -> int:
        if self.is_closed:
            return 3 * self.g - 3 + self.n
        return 3 * (2 * self.g + self.h - 1) - 3 + 2 * self.n + sum(self.m)

    @property
    def is_stable(self) -> bool:
        return self._dim_formula() >= 0


def closed_type(g: int, n: int = 0) -> TopologicalType:
    return TopologicalType(g, 0, n, ())


def open_type(g: int, h: int, n: int = 0, m: Sequence[int] | None = None) -> TopologicalType:
    if m is None:
        m = (0,) * h
    return TopologicalType(g, h, n, tuple(m))


def moduli_dim(t: TopologicalType) -> int:
    """Real dimension of the moduli space of domains of type ``t``.

    Closed: ``2(3g - 3 + n)``. Open: ``3(2g + h - 1) - 3 + 2n + sum(m)``,
    which is also the complex dimension of the doubled closed type.
    """
    if not t.is_stable:
        raise UnstableType(f"unstable type {t}")
    d = t._dim_formula()
    return 2 * d if t.is_closed else d


def double_genus(t: TopologicalType) -> int:
    """Genus ``2g + h - 1`` of the complex double of an open type."""
    if t.is_closed:
        raise ClosedType("the complex double is defined for bordered types only")
    return 2 * t.g + t.h - 1


def riemann_roch_index(rank: int, euler_char: int, maslov: int) -> int:
    return rank * euler_char + maslov


# Maslov indices on the disk with Maslov-class-zero Lagrangian boundary.
# Sign convention is left to the caller: both signed values are exposed.
DISK_TANGENT_MASLOV = 2
TOTAL_MASLOV = 0


def normal_maslov(total: int = TOTAL_MASLOV, tangent: int = DISK_TANGENT_MASLOV) -> int:
    return total - tangent


def maslov_factor(total: int = TOTAL_MASLOV, tangent: int = DISK_TANGENT_MASLOV) -> Fraction:
    """Half the normal Maslov index; ``-1`` for an embedded disk."""
    return Fraction(normal_maslov(total, tangent), 2)


# ---------------------------------------------------------------------------
# frame loops

Complex = tuple[Fraction, Fraction]


def _to_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    # ints and floats convert exactly
    return Fraction(x)


def _to_complex(z: Any) -> Complex:
    if isinstance(z, complex):
        return (Fraction(z.real), Fraction(z.imag))
    if isinstance(z, (list, tuple)):
        re, im = z
        return (_to_fraction(re), _to_fraction(im))
    return (_to_fraction(z), Fraction(0))


def _cmul(a: Complex, b: Complex) -> Complex:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a: Complex, b: Complex) -> Complex:
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _det(mat: list[list[Complex]]) -> Complex:
    """Exact determinant by Gaussian elimination over Q(i)."""
    a = [row[:] for row in mat]
    n = len(a)
    det: Complex = (Fraction(1), Fraction(0))
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != (0, 0)), None)
        if piv is None:
            return (Fraction(0), Fraction(0))
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = (-det[0], -det[1])
        p = a[col][col]
        det = _cmul(det, p)
        for r in range(col + 1, n):
            if a[r][col] == (0, 0):
                continue
            f = _cdiv(a[r][col], p)
            for c in range(col, n):
                prod = _cmul(f, a[col][c])
                a[r][c] = (a[r][c][0] - prod[0], a[r][c][1] - prod[1])
    return det


@dataclass(frozen=True)
class FrameLoop:
    """Cyclic samples of ``n x n`` complex frames of totally real ``n``-planes.

    Entries are stored as exact ``(re, im)`` pairs of Fractions; floats are
    converted exactly.
    """

    n: int
    samples: tuple[tuple[tuple[Complex, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("frame dimension must be positive")
        if not self.samples:
            raise ValueError("a frame loop needs at least one sample")
        conv = []
        for s in self.samples:
            rows = tuple(tuple(_to_complex(z) for z in row) for row in s)
            if len(rows) != self.n or any(len(r) != self.n for r in rows):
                raise ValueError(f"sample is not {self.n}x{self.n}")
            conv.append(rows)
        object.__setattr__(self, "samples", tuple(conv))

    @classmethod
    def from_matrices(cls, mats: Iterable[Sequence[Sequence[Any]]]) -> FrameLoop:
        mats = [[list(r) for r in m] for m in mats]
        return cls(len(mats[0]), tuple(tuple(tuple(r) for r in m) for m in mats))

    @classmethod
    def from_json(cls, data: str | dict) -> FrameLoop:
        """Parse ``{"n": int, "samples": [[[re, im], ...n*n...], ...]}`` (row-major)."""
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        mats = []
        for flat in data["samples"]:
            if len(flat) != n * n:
                raise ValueError(f"sample has {len(flat)} entries, expected {n * n}")
            mats.append(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        return cls(n, tuple(mats))

    def to_json(self) -> dict:
        from .exact import format_rational

        return {
            "n": self.n,
            "samples": [
                [[format_rational(z[0]), format_rational(z[1])] for row in s for z in row]
                for s in self.samples
            ],
        }

    def det_squares(self) -> list[Complex]:
        out = []
        for k, s in enumerate(self.samples):
            d = _det([list(r) for r in s])
            if d == (0, 0):
                raise DegenerateFrame(f"sample {k} has zero determinant")
            out.append(_cmul(d, d))
        return out


_GUARD_DPS = 40


def maslov_index(loop: FrameLoop) -> int:
    """Winding number of ``det(A)^2`` around 0 over the cyclic samples.

    Each step contributes the principal argument of the exact ratio
    ``det^2(A_{k+1}) / det^2(A_k)``; a step of absolute size >= pi means the
    grid is too coarse to fix the winding.
    """
    dets = loop.det_squares()
    total = mpmath.mpf(0)
    with mpmath.workdps(_GUARD_DPS):
        pi = mpmath.pi
        for k in range(len(dets)):
            ratio = _cdiv(dets[(k + 1) % len(dets)], dets[k])
            if ratio[1] == 0 and ratio[0] < 0:
                raise UndersampledLoop(f"phase jump of pi between samples {k} and {k + 1}")
            step = mpmath.atan2(
                mpmath.mpf(ratio[1].numerator) / ratio[1].denominator,
                mpmath.mpf(ratio[0].numerator) / ratio[0].denominator,
            )
            if abs(step) >= pi:
                raise UndersampledLoop(f"phase jump >= pi between samples {k} and {k + 1}")
            total += step
        turns = total / (2 * pi)
        w = int(mpmath.nint(turns))
        if abs(turns - w) > mpmath.mpf(1) / 4:
            raise UndersampledLoop(f"total winding {turns} is not near an integer")
    return w


def direct_sum(a: FrameLoop, b: FrameLoop) -> FrameLoop:
    """Block-diagonal sum of two loops sampled on the same grid."""
    if len(a.samples) != len(b.samples):
        raise ValueError("loops must share a sample grid")
    zero = (Fraction(0), Fraction(0))
    n = a.n + b.n
    mats = []
    for sa, sb in zip(a.samples, b.samples):
        rows = [list(r) + [zero] * b.n for r in sa] + [[zero] * a.n + list(r) for r in sb]
        mats.append(tuple(tuple(r) for r in rows))
    return FrameLoop(n, tuple(mats))


def phase_loop(winding_halves: Sequence[int], samples: int, *, rotate: complex = 1) -> FrameLoop:
    """Diagonal loop ``diag(e^{i k_j theta / 2})`` on ``samples`` points of ``[0, 2 pi)``.

    Its Maslov index is ``sum(k_j)``. ``rotate`` multiplies every entry by a
    fixed unit scalar.
    """
    import cmath

    n = len(winding_halves)
    mats = []
    for s in range(samples):
        theta = 2 * cmath.pi * s / samples
        mats.append(
            [
                [rotate * cmath.exp(0.5j * k * theta) if i == j else 0 for j, k in enumerate(winding_halves)]
                for i in range(n)
            ]
        )
    return FrameLoop.from_matrices(mats)


def disk_boundary_tangent_loop(samples: int) -> FrameLoop:
    """Tangent frame ``i e^{i theta}`` of the unit circle (Maslov index 2)."""
    return phase_loop([2], samples, rotate=1j)
