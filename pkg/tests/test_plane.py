from itertools import combinations

import numpy as np
import pytest

from ecplanes import plane
from ecplanes.errors import IdOutOfRange, NonPrimeOrder, OrderTooLarge


def test_fano_counts():
    p = plane.build_plane(2)
    assert (p.num_points, p.num_lines) == (7, 7)
    assert all(len(p.points_of_line(j)) == 3 for j in range(7))


def test_order_three_counts():
    p = plane.build_plane(3)
    assert (p.num_points, p.num_lines) == (13, 13)
    assert all(len(p.points_of_line(j)) == 4 for j in range(13))
    assert all(len(p.lines_of_point(i)) == 4 for i in range(13))


@pytest.mark.parametrize("q", [4, 6, 9, 1, 0])
def test_non_prime_rejected(q):
    with pytest.raises(NonPrimeOrder):
        plane.build_plane(q)


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        plane.build_plane(101)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13, 17, 19, 23])
def test_axioms_hold(q):
    rep = plane.verify_axioms(plane.build_plane(q))
    assert rep.ok, rep.to_dict()


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_regularity_and_pairwise_meets(q):
    p = plane.build_plane(q)
    inc = p.incidence.astype(int)
    assert set(inc.sum(axis=0)) == {q + 1}
    assert set(inc.sum(axis=1)) == {q + 1}
    lines = [set(p.points_of_line(j)) for j in range(p.num_lines)]
    for a, b in combinations(lines, 2):
        assert len(a & b) == 1
    pts = [set(p.lines_of_point(i)) for i in range(p.num_points)]
    for a, b in combinations(pts, 2):
        assert len(a & b) == 1


def test_flipped_bit_is_caught():
    p = plane.build_plane(3)
    inc = p.incidence.copy()
    inc[0, 0] = not inc[0, 0]
    rep = plane.verify_axioms(plane.ProjectivePlane(3, inc))
    assert not (rep.axiom1 and rep.axiom2)
    w = rep.witness1 or rep.witness2
    assert w is not None and len(w) == 3
    assert not rep.counts


def test_degenerate_fails_axiom3():
    rep = plane.verify_axioms(plane.degenerate_plane(4))
    assert rep.axiom1 and rep.axiom2
    assert not rep.axiom3


def test_ids_sorted_and_checked():
    p = plane.build_plane(5)
    for j in range(p.num_lines):
        ids = p.points_of_line(j)
        assert ids == sorted(ids) and len(ids) == 6
    with pytest.raises(IdOutOfRange):
        p.points_of_line(p.num_lines)
    with pytest.raises(IdOutOfRange):
        p.lines_of_point(-1)


def test_line_through_four_points_order_three():
    # some line holds 4 points, any line's points pairwise determine it
    p = plane.build_plane(3)
    pts = p.points_of_line(0)
    for a, b in combinations(pts, 2):
        common = set(p.lines_of_point(a)) & set(p.lines_of_point(b))
        assert common == {0}


def test_csv_and_json_round_trip():
    p = plane.build_plane(3)
    a = plane.from_csv(plane.to_csv(p))
    b = plane.from_json(plane.to_json(p))
    for x in (a, b):
        assert x.order == 3
        assert np.array_equal(x.incidence, p.incidence)
