from fractions import Fraction

import pytest

from zipstrata import linalg
from zipstrata.rootdata import (
    build_root_datum, check_root_datum, fundamental_weights, highest_root, is_minuscule, pair,
    product_root_datum, rho, special_simple_roots,
)

ALL = [(s, n) for s in "ABCD" for n in range(3 if s == "D" else 1, 7)]


@pytest.mark.parametrize("series,n", ALL)
def test_invariants(series, n):
    rd = build_root_datum(series, n)
    check_root_datum(rd)
    expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[series]
    assert len(rd.positive_roots) == expected
    r = rho(rd)
    assert all(pair(r, c) == 1 for c in rd.simple_coroots)
    assert all(pair(a, rd.coroot(a)) == 2 for a in rd.roots)


def test_siegel_c2():
    rd = build_root_datum("C", 2, similitude=True)
    assert rd.dim == 3 and rd.rank == 2
    assert rd.simple_roots == ((0, 1, -1), (-1, 0, 2))
    assert len(rd.positive_roots) == 4
    f1, f2 = (0, 1, 0), (0, 0, 1)
    assert pair(rd.simple_roots[0], f1) == 1
    assert pair(rd.simple_roots[1], f2) == 2


def test_a1():
    rd = build_root_datum("A", 1)
    assert len(rd.simple_roots) == 1 and len(rd.roots) == 2
    assert rd.galois == linalg.identity(rd.dim)


def test_a3_twist():
    rd = build_root_datum("A", 3, galois_order=2)
    assert rd.galois_simple_perm == (2, 1, 0)
    assert linalg.matmul(rd.galois, rd.galois) == linalg.identity(rd.dim)
    check_root_datum(rd)


@pytest.mark.parametrize("args", [("E", 2), ("A", 0), ("B", 3, False, 2), ("A", 1, False, 2), ("C", 2, False, 3)])
def test_rejects(args):
    with pytest.raises(ValueError):
        build_root_datum(*args)


def test_pair_rank_mismatch():
    with pytest.raises(ValueError):
        pair((1, 2), (1, 2, 3))


def test_fundamental_weights():
    rd = build_root_datum("A", 1)
    (f,) = fundamental_weights(rd)
    assert f == tuple(Fraction(x, 2) for x in rd.simple_roots[0])
    rd = build_root_datum("C", 2)
    assert fundamental_weights(rd)[1] == (1, 1)
    for series, n in ALL:
        rd = build_root_datum(series, n)
        fws = fundamental_weights(rd)
        for i, f in enumerate(fws):
            assert [pair(f, c) for c in rd.simple_coroots] == [int(i == j) for j in range(n)]


def test_fundamental_weights_vanish_on_centre():
    rd = build_root_datum("C", 3, similitude=True)
    centre = linalg.nullspace([list(a) for a in rd.simple_roots])
    for f in fundamental_weights(rd):
        assert centre and all(pair(f, c) == 0 for c in centre)


def test_highest_and_special():
    rd = build_root_datum("A", 2)
    assert rd.root_coords(highest_root(rd)) == (1, 1)
    assert special_simple_roots(rd) == (0, 1)
    rd = build_root_datum("C", 2)
    assert highest_root(rd) == (2, 0)
    assert rd.root_coords(highest_root(rd)) == (2, 1)
    assert special_simple_roots(rd) == (1,)
    assert special_simple_roots(build_root_datum("B", 4)) == (0,)
    assert special_simple_roots(build_root_datum("D", 5)) == (0, 3, 4)


def test_minuscule():
    for n in range(1, 6):
        rd = build_root_datum("A", n)
        assert all(is_minuscule(rd, f) for f in fundamental_weights(rd))
    rd = build_root_datum("C", 3)
    assert not is_minuscule(rd, fundamental_weights(rd)[1])


def test_galois_commutes_with_coroots():
    for rd in [build_root_datum("A", 4, galois_order=2), build_root_datum("D", 4, galois_order=2),
               build_root_datum("A", 3, True, 2)]:
        for a in rd.positive_roots:
            fa = rd.galois_char(a)
            assert fa in rd.positive_roots
            assert rd.galois_cochar(rd.coroot(a)) == rd.coroot(fa)


def test_product():
    rd = product_root_datum(build_root_datum("C", 2), 2)
    assert rd.rank == 4 and rd.dim == 4
    assert rd.galois_simple_perm == (2, 3, 0, 1)
    assert len(rd.components) == 2
    check_root_datum(rd)
