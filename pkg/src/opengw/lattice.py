"""Degeneration lattice of cells and dimension bookkeeping for their intersections.

Strata are modeled by bubble trees hanging off the main disk. A tree vertex
is a moduli piece, either closed (genus) or open (genus, boundary count). A
closed vertex always meets its parent at an interior node, an open vertex at
a boundary node. A vertex carries one mark per incident node, so a closed
vertex with ``k`` children lives in ``M_{g, k+1}`` and an open vertex with
``a`` closed and ``b`` open children in ``M_{(g,h), a, (b+1, 0, ...)}``.

Three basic collisions relate cells:

I    two interior attachments meet: a sphere bubble carries both;
II   two boundary attachments meet: a disk bubble carries both on its boundary;
III  an interior attachment reaches the boundary: a disk bubble carries it
     at an interior point.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .moduli import UnstableType, closed_type, moduli_dim, open_type
from .partitions import GhostPartition, enumerate_partitions

__all__ = [
    "InvalidConfiguration",
    "Piece",
    "BubbleTree",
    "Attachment",
    "Configuration",
    "DegenerationMove",
    "INTERIOR",
    "BOUNDARY",
    "basic_degenerations",
    "cell_configuration",
    "collision_configuration",
    "configuration_moves",
    "strata",
    "all_strata",
    "containing_cells",
    "config_dimension",
    "gluing_audit",
    "LatticeGraph",
    "lattice_graph",
]

INTERIOR = "interior"
BOUNDARY = "boundary"


class InvalidConfiguration(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Piece:
    """``h == 0`` for a closed piece of genus ``g``; else an open ``(g, h)`` piece."""

    g: int
    h: int = 0

    @property
    def is_closed(self) -> bool:
        return self.h == 0

    @property
    def double_genus(self) -> int:
        return 2 * self.g if self.is_closed else 2 * self.g + self.h - 1

    def __str__(self) -> str:
        return str(self.g) if self.is_closed else f"({self.g},{self.h})"


SPHERE = Piece(0, 0)
DISK = Piece(0, 1)


@dataclass(frozen=True, order=True)
class BubbleTree:
    piece: Piece
    children: tuple[BubbleTree, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(sorted(self.children)))

    def vertices(self) -> Iterator[BubbleTree]:
        yield self
        for c in self.children:
            yield from c.vertices()

    def nodes(self) -> Iterator[str]:
        """Kinds of the nodes strictly inside the tree."""
        for c in self.children:
            yield INTERIOR if c.piece.is_closed else BOUNDARY
            yield from c.nodes()

    def vertex_type(self):
        """Topological type of this vertex with its marks (parent node included)."""
        p = self.piece
        n_closed = sum(1 for c in self.children if c.piece.is_closed)
        n_open = len(self.children) - n_closed
        if p.is_closed:
            return closed_type(p.g, len(self.children) + 1)
        return open_type(p.g, p.h, n_closed, (n_open + 1,) + (0,) * (p.h - 1))

    def __str__(self) -> str:
        if not self.children:
            return str(self.piece)
        return f"{self.piece}[" + ", ".join(str(c) for c in self.children) + "]"


@dataclass(frozen=True, order=True)
class Attachment:
    location: str
    tree: BubbleTree

    def __str__(self) -> str:
        return f"{'i' if self.location == INTERIOR else 'b'}:{self.tree}"


@dataclass(frozen=True)
class Configuration:
    """A stratum: bubble trees attached to the main disk, plus the smoothed type.

    Attachments are kept sorted, so equal strata compare equal.
    """

    target: tuple[int, int]
    attachments: tuple[Attachment, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "attachments", tuple(sorted(self.attachments)))

    def vertices(self) -> Iterator[BubbleTree]:
        for a in self.attachments:
            yield from a.tree.vertices()

    def nodes(self) -> list[str]:
        """Every node of the curve: disk attachments first, then tree-internal ones."""
        out = [a.location for a in self.attachments]
        for a in self.attachments:
            out.extend(a.tree.nodes())
        return out

    def smoothed_type(self) -> tuple[int, int]:
        g = sum(v.piece.g for v in self.vertices())
        h = 1 + sum(v.piece.h - 1 for v in self.vertices() if not v.piece.is_closed)
        return (g, h)

    def validate(self) -> None:
        for a in self.attachments:
            if a.location not in (INTERIOR, BOUNDARY):
                raise InvalidConfiguration(f"unknown location {a.location!r}")
            if (a.location == INTERIOR) != a.tree.piece.is_closed:
                raise InvalidConfiguration(f"{a.location} attachment with root {a.tree.piece}")
        for v in self.vertices():
            if v.piece.is_closed and any(not c.piece.is_closed for c in v.children):
                raise InvalidConfiguration(f"open piece attached to closed piece {v.piece}")
            if v.piece.g < 0 or v.piece.h < 0:
                raise InvalidConfiguration(f"negative piece {v.piece}")
            if not v.vertex_type().is_stable:
                raise InvalidConfiguration(f"unstable vertex {v.piece} with {len(v.children)} children")
        if self.smoothed_type() != self.target:
            raise InvalidConfiguration(f"smooths to {self.smoothed_type()}, not {self.target}")

    def to_json(self) -> dict:
        def tree(t: BubbleTree) -> dict:
            return {"piece": [t.piece.g, t.piece.h], "children": [tree(c) for c in t.children]}

        return {
            "target": list(self.target),
            "attachments": [{"location": a.location, "tree": tree(a.tree)} for a in self.attachments],
        }

    def __str__(self) -> str:
        return "{" + "; ".join(str(a) for a in self.attachments) + "}"


def config_dimension(c: Configuration) -> int:
    """Real dimension of the stratum.

    Each disk attachment moves in the interior (2) or along the boundary (1);
    each vertex adds the dimension of its marked moduli space.
    """
    c.validate()
    d = sum(2 if a.location == INTERIOR else 1 for a in c.attachments)
    try:
        d += sum(moduli_dim(v.vertex_type()) for v in c.vertices())
    except UnstableType as e:  # pragma: no cover - validate() catches this first
        raise InvalidConfiguration(str(e)) from e
    return d


def gluing_audit(c: Configuration) -> tuple[int, bool]:
    """Stratum dimension plus one gluing parameter per node, against ``3 g~``."""
    total = config_dimension(c) + sum(2 if k == INTERIOR else 1 for k in c.nodes())
    g, h = c.target
    return total, total == 3 * (2 * g + h - 1)


# ---------------------------------------------------------------------------
# partitions <-> configurations


def cell_configuration(lam: GhostPartition) -> Configuration:
    """Top stratum of a cell: every ghost attached directly to the disk."""
    atts = [Attachment(INTERIOR, BubbleTree(Piece(x))) for x in lam.closed]
    atts += [Attachment(BOUNDARY, BubbleTree(Piece(a, b))) for a, b in lam.open]
    return Configuration(lam.target, tuple(atts))


@dataclass(frozen=True)
class DegenerationMove:
    """``kind`` is ``"I"``, ``"II"`` or ``"III"``; ``operands`` index the ghosts
    of the source partition listed closed first, then open."""

    kind: str
    operands: tuple[int, ...]

    def __post_init__(self) -> None:
        arity = {"I": 2, "II": 2, "III": 1}
        if self.kind not in arity or len(self.operands) != arity[self.kind]:
            raise ValueError(f"bad move {self.kind} {self.operands}")


def basic_degenerations(lam: GhostPartition) -> list[tuple[DegenerationMove, GhostPartition]]:
    """Partitions one basic collision away from ``lam``, with the move used.

    Moves on identical ghosts that produce the same partition are reported
    once, using the first such operands.
    """
    closed, opens, r = lam.closed, lam.open, lam.r
    out: dict[tuple[str, GhostPartition], DegenerationMove] = {}

    def add(kind: str, ops: tuple[int, ...], new_closed, new_open) -> None:
        new = GhostPartition(lam.target, tuple(new_closed), tuple(new_open))
        out.setdefault((kind, new), DegenerationMove(kind, ops))

    for i, j in combinations(range(r), 2):
        rest = [x for k, x in enumerate(closed) if k not in (i, j)]
        add("I", (i, j), rest + [closed[i] + closed[j]], opens)
    for i, j in combinations(range(len(opens)), 2):
        (a, b), (c, d) = opens[i], opens[j]
        rest = [p for k, p in enumerate(opens) if k not in (i, j)]
        add("II", (r + i, r + j), closed, rest + [(a + c, b + d - 1)])
    for i in range(r):
        rest = [x for k, x in enumerate(closed) if k != i]
        add("III", (i,), rest, list(opens) + [(closed[i], 1)])
    return [(mv, new) for (_, new), mv in out.items()]


def _merge(kind: str, atts: list[Attachment]) -> Attachment:
    if kind == "I":
        return Attachment(INTERIOR, BubbleTree(SPHERE, tuple(a.tree for a in atts)))
    return Attachment(BOUNDARY, BubbleTree(DISK, tuple(a.tree for a in atts)))


def configuration_moves(c: Configuration) -> Iterator[tuple[str, Configuration]]:
    """Configurations one basic collision deeper than ``c``."""
    atts = list(c.attachments)
    idx_int = [i for i, a in enumerate(atts) if a.location == INTERIOR]
    idx_bdy = [i for i, a in enumerate(atts) if a.location == BOUNDARY]

    def rebuild(drop: tuple[int, ...], new: Attachment) -> Configuration:
        return Configuration(c.target, tuple(a for k, a in enumerate(atts) if k not in drop) + (new,))

    for i, j in combinations(idx_int, 2):
        yield "I", rebuild((i, j), _merge("I", [atts[i], atts[j]]))
    for i, j in combinations(idx_bdy, 2):
        yield "II", rebuild((i, j), _merge("II", [atts[i], atts[j]]))
    for i in idx_int:
        yield "III", rebuild((i,), _merge("III", [atts[i]]))


def collision_configuration(lam: GhostPartition, move: DegenerationMove) -> Configuration:
    """The stratum ``N_lam  cap  N_lam'`` reached from the top stratum of ``lam`` by ``move``."""
    top = cell_configuration(lam)
    ghosts = [Attachment(INTERIOR, BubbleTree(Piece(x))) for x in lam.closed]
    ghosts += [Attachment(BOUNDARY, BubbleTree(Piece(a, b))) for a, b in lam.open]
    chosen = [ghosts[k] for k in move.operands]
    rest = list(top.attachments)
    for a in chosen:
        rest.remove(a)
    return Configuration(lam.target, tuple(rest) + (_merge(move.kind, chosen),))


def strata(lam: GhostPartition, max_depth: int | None = None) -> set[Configuration]:
    """Configurations reachable from the top stratum of ``lam`` by collisions.

    Strata of the cell that arise only from degenerating a ghost itself (for
    instance an open ghost splitting off a disk bubble) are not generated
    here; :func:`containing_cells` recognizes them from the other side.
    """
    start = cell_configuration(lam)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        c, depth = queue.popleft()
        if max_depth is not None and depth >= max_depth:
            continue
        for _, nxt in configuration_moves(c):
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, depth + 1))
    return seen


def all_strata(g: int, h: int, max_depth: int | None = None) -> set[Configuration]:
    out: set[Configuration] = set()
    for lam in enumerate_partitions(g, h):
        out |= strata(lam, max_depth)
    return out


def _smoothed_piece(t: BubbleTree) -> tuple[int, int]:
    g = sum(v.piece.g for v in t.vertices())
    if t.piece.is_closed:
        return (g, 0)
    return (g, 1 + sum(v.piece.h - 1 for v in t.vertices() if not v.piece.is_closed))


def _ghost_options(t: BubbleTree) -> list[list[tuple[int, int]]]:
    """Ways one attachment can sit in a cell: as a single smoothed ghost, or,
    when its root is a genus-0 bubble, by absorbing the root into the disk."""
    options = [[_smoothed_piece(t)]]
    if t.piece in (SPHERE, DISK):
        combos: list[list[tuple[int, int]]] = [[]]
        for child in t.children:
            combos = [acc + opt for acc in combos for opt in _ghost_options(child)]
        options.extend(combos)
    return options


def containing_cells(c: Configuration) -> set[GhostPartition]:
    """Partitions whose cell closure contains the stratum ``c``."""
    c.validate()
    combos: list[list[tuple[int, int]]] = [[]]
    for a in c.attachments:
        combos = [acc + opt for acc in combos for opt in _ghost_options(a.tree)]
    out = set()
    for ghosts in combos:
        closed = [g for g, h in ghosts if h == 0]
        opens = [(g, h) for g, h in ghosts if h > 0]
        out.add(GhostPartition(c.target, tuple(closed), tuple(opens)))
    return out


# ---------------------------------------------------------------------------
# lattice graph


@dataclass(frozen=True)
class LatticeGraph:
    vertices: tuple[GhostPartition, ...]
    edges: tuple[tuple[int, int, str], ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.vertices))}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    @property
    def connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.vertices)

    def restrict(self, keep: list[GhostPartition]) -> LatticeGraph:
        """Induced subgraph on ``keep``, renumbered in the given order."""
        pos = {lam: k for k, lam in enumerate(keep)}
        old = {lam: k for k, lam in enumerate(self.vertices)}
        missing = [lam for lam in keep if lam not in old]
        if missing:
            raise KeyError(f"not vertices of the lattice: {missing}")
        edges = []
        for i, j, kind in self.edges:
            a, b = self.vertices[i], self.vertices[j]
            if a in pos and b in pos:
                edges.append((pos[a], pos[b], kind))
        return LatticeGraph(tuple(keep), tuple(sorted(edges)))

    def to_json(self) -> dict:
        return {
            "vertices": [lam.to_json() for lam in self.vertices],
            "edges": [[i, j, kind] for i, j, kind in self.edges],
            "connected": self.connected,
        }

    def to_dot(self) -> str:
        lines = ["graph lattice {"]
        for k, lam in enumerate(self.vertices):
            lines.append(f'  {k} [label="{lam}"];')
        for i, j, kind in self.edges:
            lines.append(f'  {i} -- {j} [label="{kind}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def lattice_graph(g: int, h: int) -> LatticeGraph:
    """Partitions of ``(g, h)`` joined by basic degenerations.

    An edge ``(i, j, kind)`` points from the less degenerate ``i`` to ``j``;
    parallel moves of the same kind are merged.
    """
    verts = enumerate_partitions(g, h)
    index = {lam: k for k, lam in enumerate(verts)}
    edges = set()
    for i, lam in enumerate(verts):
        for move, new in basic_degenerations(lam):
            edges.add((i, index[new], move.kind))
    return LatticeGraph(tuple(verts), tuple(sorted(edges)))
