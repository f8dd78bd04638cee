import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from laurentkit.errors import NotUnimodular
from laurentkit.lattice import (
    IntMatrix,
    LatticeBasis,
    determinant,
    ext_gcd,
    hermite_normal_form,
    integer_kernel,
    intersect_with_subspace,
    invert_unimodular,
    lattice_membership,
    saturate,
    smith_normal_form,
)

small = st.integers(-6, 6)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    )


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_ext_gcd_bezout(a, b):
    g, x, y = ext_gcd(a, b)
    assert g >= 0 and a * x + b * y == g
    if a or b:
        assert a % g == 0 and b % g == 0


@settings(max_examples=200)
@given(matrices())
def test_hnf_shape(m):
    h, u = hermite_normal_form(m)
    assert u @ IntMatrix(m) == h
    assert abs(determinant(u)) == 1
    pivots = []
    for row in h.tolist():
        nz = [j for j, x in enumerate(row) if x]
        if nz:
            pivots.append(nz[0])
            assert row[nz[0]] > 0
    assert pivots == sorted(set(pivots))
    for i, pc in enumerate(pivots):
        for k in range(i):
            assert 0 <= h[k, pc] < h[i, pc]


@settings(max_examples=200)
@given(matrices())
def test_snf_divisibility(m):
    s, u, v = smith_normal_form(m)
    assert u @ IntMatrix(m) @ v == s
    diag = [s[i, i] for i in range(min(s.rows, s.cols))]
    nonzero = [d for d in diag if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert nonzero == oracles.invariant_factors(m)


def test_known_snf():
    s, _, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [s[i, i] for i in range(3)] == [2, 6, 12]


def test_determinant_matches_leibniz():
    m = [[2, -1, 3], [0, 4, 1], [5, 2, -2]]
    assert determinant(m) == oracles.leibniz_det(m)


def test_kernel_of_relation_constraints():
    k = integer_kernel([[2, -3]], 2)
    assert [tuple(v) for v in k] in ([(3, 2)], [(-3, -2)])
    assert integer_kernel([[1, 0], [0, 1]], 2).rank == 0


def test_invert_unimodular_and_rejects_singular():
    e = IntMatrix([[2, 1], [1, 1]])
    assert e @ invert_unimodular(e) == IntMatrix.identity(2)
    with pytest.raises(NotUnimodular):
        invert_unimodular([[2, 0], [0, 1]])


def test_membership_coordinates_follow_generator_order():
    assert lattice_membership((0, 1), [(1, 0), (-1, 2)], 2) is None
    assert lattice_membership((1, 4), [(1, 0), (-1, 2)], 2) == (3, 2)


def test_saturation_and_subspace():
    lat = LatticeBasis.span([(2, 4)], 2)
    assert (1, 2) not in lat
    assert (1, 2) in saturate(lat)
    full = LatticeBasis.full(3)
    plane = LatticeBasis.span([(1, 0, 0), (0, 1, 0)], 3)
    assert intersect_with_subspace(full, plane).rank == 2
    assert intersect_with_subspace(LatticeBasis.span([(1, 1, 1)], 3), plane).rank == 0


def test_lattice_equality_is_canonical():
    a = LatticeBasis.span([(1, 2), (0, 3)], 2)
    b = LatticeBasis.span([(1, -1), (1, 2)], 2)
    assert a == b
