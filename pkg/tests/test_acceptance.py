"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction as F
from math import factorial, prod

import pytest

from opengw.contributions import (
    alpha_coefficients,
    contribution,
    contribution_ordered,
    gf_series,
    special_case_11,
)
from opengw.exact import PowerSeries, series_exp, series_inv, series_log, sin_half_series
from opengw.lattice import (
    BOUNDARY,
    DISK,
    INTERIOR,
    SPHERE,
    Attachment,
    BubbleTree,
    Configuration,
    Piece,
    all_strata,
    basic_degenerations,
    collision_configuration,
    config_dimension,
    containing_cells,
    gluing_audit,
    lattice_graph,
)
from opengw.moduli import (
    disk_boundary_tangent_loop,
    maslov_index,
    normal_maslov,
    riemann_roch_index,
    DISK_TANGENT_MASLOV,
)
from opengw.partitions import GhostPartition, cell_dimension, cell_summary, enumerate_partitions

RESULTS: list[str] = []


def record(name, limit, fn):
    t0 = time.perf_counter()
    err = None
    try:
        fn()
    except AssertionError as e:
        err = e
    dt = time.perf_counter() - t0
    if err is None and limit is not None and dt >= limit:
        err = AssertionError(f"took {dt:.2f}s, limit {limit}s")
    budget = f" (limit {limit}s)" if limit is not None else ""
    RESULTS.append(f"{'PASS' if err is None else 'FAIL'}  {name}  [{dt:.3f}s{budget}]")
    print(RESULTS[-1])
    if err is not None:
        raise err


def P(target, closed=(), opens=()):
    return GhostPartition(target, tuple(closed), tuple(opens))


def T(piece, *children):
    return BubbleTree(piece, children)


# ---------------------------------------------------------------------------


def check_generating_function():
    gf = series_inv(sin_half_series(16))
    for g in range(9):
        assert contribution(g, 1, -1) == gf[2 * g], g


def check_vanishing():
    for g in range(1, 6):
        for h in range(2, 5):
            for m in (F(-1), F(1), F(2, 3)):
                assert contribution(g, h, m) == 0, (g, h, m)


def check_dimension_table():
    l1, l2, l3, l4 = P((3, 1), [1, 2]), P((3, 1), [2], [(1, 1)]), P((3, 1), [1], [(2, 1)]), P((3, 1), [], [(1, 1), (2, 1)])
    assert [cell_dimension(x) for x in (l1, l2, l3, l4)] == [14, 15, 15, 16]

    def meet(a, b):
        (c,) = [collision_configuration(a, m) for m, new in basic_degenerations(a) if new == b]
        assert {a, b} <= containing_cells(c)
        return config_dimension(c)

    assert [meet(l1, l2), meet(l1, l3), meet(l2, l4), meet(l3, l4)] == [13, 13, 14, 14]
    quad = Configuration((3, 1), (
        Attachment(BOUNDARY, T(DISK, T(Piece(1)))),
        Attachment(BOUNDARY, T(DISK, T(Piece(2)))),
    ))
    assert containing_cells(quad) == {l1, l2, l3, l4}
    assert config_dimension(quad) == 12


def check_gluing_audits():
    closed_collision = Configuration((4, 1), (
        Attachment(INTERIOR, T(SPHERE, T(Piece(1)), T(Piece(2)))),
        Attachment(BOUNDARY, T(Piece(1, 1))),
    ))
    assert config_dimension(closed_collision) == 17
    assert gluing_audit(closed_collision) == (24, True)
    quad = Configuration((3, 1), (
        Attachment(BOUNDARY, T(DISK, T(Piece(1)))),
        Attachment(BOUNDARY, T(DISK, T(Piece(2)))),
    ))
    assert gluing_audit(quad) == (18, True)
    for g in range(5):
        for h in range(1, 4):
            for c in all_strata(g, h):
                assert gluing_audit(c) == (3 * (2 * g + h - 1), True), str(c)


def check_index_suite():
    assert riemann_roch_index(1, 1, DISK_TANGENT_MASLOV) == 3
    assert riemann_roch_index(2, 1, normal_maslov()) == 0
    assert riemann_roch_index(3, 1, DISK_TANGENT_MASLOV + normal_maslov()) == 3
    for s in (12, 24, 48):
        assert maslov_index(disk_boundary_tangent_loop(s)) == 2, s


def check_rank_identity():
    for g in range(7):
        for h in range(1, 4):
            for lam in enumerate_partitions(g, h):
                s = cell_summary(lam)
                assert s.obF_rank == s.dim == cell_dimension(lam), lam


def check_property_suites():
    rng = random.Random(20261016)
    for _ in range(5):
        cs = [F(0)] + [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(40)]
        a = PowerSeries.from_list(cs, 40)
        assert series_log(series_exp(a)) == a
        b = PowerSeries.from_list([F(1)] + cs[1:], 40)
        assert series_exp(series_log(b)) == b
    s = sin_half_series(40)
    assert series_exp(series_log(s)) == s

    alpha = alpha_coefficients(8)
    gf = gf_series(8)
    aut_sum = PowerSeries(16, {2 * g: contribution(g, 1) for g in range(9)}, True)
    assert aut_sum == gf
    assert series_exp(PowerSeries(16, {2 * g: -alpha[g] for g in alpha}, True)) == gf

    for g in range(1, 7):
        resummed = sum(contribution_ordered(g, length=r) / factorial(r) for r in range(1, g + 1))
        assert resummed == contribution(g, 1), g

    for g in range(9):
        assert lattice_graph(g, 1).connected, g


def check_special_case_11():
    assert special_case_11(-1) == contribution(1, 1, -1) == gf_series(1)[2] == F(1, 24)
    G = lattice_graph(1, 1)
    assert len(G.vertices) == 2 and len(G.edges) == 1
    assert sorted(cell_dimension(v) for v in G.vertices) == [4, 5]
    i, j, kind = G.edges[0]
    assert (cell_dimension(G.vertices[i]), cell_dimension(G.vertices[j]), kind) == (4, 5, "III")


CRITERIA = [
    ("generating-function consistency, g <= 8", 1.0, check_generating_function),
    ("vanishing for 1 <= g <= 5, 2 <= h <= 4", None, check_vanishing),
    ("(3,1) dimension table 14/15/15/16, 13/13/14/14, 12", None, check_dimension_table),
    ("gluing audits 24 and 18, exhaustive g <= 4, h <= 3", 10.0, check_gluing_audits),
    ("index suite: RR (3,0,3), Maslov 2 under refinement", None, check_index_suite),
    ("rank identity obF = dim, g <= 6, h <= 3", None, check_rank_identity),
    ("property suites: exp/log, exp/Aut, ordered, connectivity", 30.0, check_property_suites),
    ("(1,1) special case and two-cell lattice", None, check_special_case_11),
]


@pytest.mark.parametrize("name,limit,fn", CRITERIA, ids=[c[2].__name__[6:] for c in CRITERIA])
def test_criterion(name, limit, fn):
    record(name, limit, fn)


if __name__ == "__main__":
    failed = 0
    for name, limit, fn in CRITERIA:
        try:
            record(name, limit, fn)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
