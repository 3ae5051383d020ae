from fractions import Fraction

import pytest

from conftest import siegel
from zipstrata.rootdata import build_root_datum, product_root_datum
from zipstrata.weyl import weyl_order
from zipstrata.zipdata import (
    cominimal_elements, dual_matching, length_strata, make_zip_datum, minimal_elements,
    strata_table, truncation,
)


def test_siegel_c2_types(siegel_c2):
    zd = siegel_c2
    assert zd.K == (0,) and zd.I == (0,) and zd.J == (0,)
    assert len(zd.iw) == 4
    assert zd.w0L == zd.w0 * zd.w0I * zd.w0
    assert zd.w0M == zd.W.frobenius(zd.w0L)
    assert zd.w1 == zd.w0 * zd.w0I


def test_degenerate_mu():
    rd = build_root_datum("C", 2, similitude=True)
    zd = make_zip_datum(rd, (0, 0, 0))
    assert zd.K == (0, 1) and zd.I == (0, 1)
    assert [w.word for w in zd.iw] == [()]
    zd = make_zip_datum(rd, (0, 2, 1))
    assert zd.K == () and len(zd.iw) == 8


def test_rejects_bad_mu():
    rd = build_root_datum("C", 2, similitude=True)
    with pytest.raises(ValueError):
        make_zip_datum(rd, (3, 2, 1))
    with pytest.raises(ValueError):
        make_zip_datum(rd, (1.0, 1, 1))
    with pytest.raises(ValueError):
        make_zip_datum(rd, (1, 1))


def test_strata_table_siegel_c2(siegel_c2):
    zd = siegel_c2
    rows = strata_table(zd)
    assert [r.length for r in rows] == [0, 1, 2, 3]
    assert all(r.dimension == r.length for r in rows)
    e = rows[0]
    assert e.w.is_identity and e.involution_image == zd.top
    assert sorted(zd.top.length - r.length for r in rows) == [r.length for r in rows]
    assert rows[-1].cominimal_partner == zd.W.frobenius(zd.w1)
    with pytest.raises(OverflowError):
        strata_table(zd, max_order=3)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_minimal_and_cominimal(g):
    zd = siegel(g)
    mins, comins = minimal_elements(zd), cominimal_elements(zd)
    assert len(mins) == len(comins) == len(zd.iw)
    ident = zd.W.identity
    assert ident in mins and ident in comins
    assert max(mins, key=lambda w: w.length) == zd.w1
    assert max(comins, key=lambda w: w.length) == zd.W.frobenius(zd.w1)
    rows = strata_table(zd)
    assert {r.cominimal_partner for r in rows} == set(comins)
    assert {r.minimal_partner for r in rows} == set(mins)
    assert all(r.cominimal_partner.length == r.length == r.minimal_partner.length for r in rows)


@pytest.mark.parametrize("rd,mu", [
    (build_root_datum("A", 3, galois_order=2), (1, 0, 0, 0)),
    (build_root_datum("A", 3, galois_order=2), (1, 1, 0, 0)),
    (build_root_datum("A", 4, True, 2), (1, 1, 1, 0, 0, 0)),
    (build_root_datum("D", 4, galois_order=2), (1, 0, 0, 0)),
    (product_root_datum(build_root_datum("C", 2), 3), (Fraction(1, 2),) * 6),
])
def test_matching_is_length_preserving_bijection(rd, mu):
    zd = make_zip_datum(rd, mu)
    matching = dual_matching(zd)
    assert set(matching) == set(zd.iw)
    assert set(matching.values()) == set(zd.wj)
    assert len(zd.iw) * len(zd.W.subgroup(zd.I)) == weyl_order(rd)
    top = [r for r in strata_table(zd) if r.w == zd.top][0]
    assert top.cominimal_partner == zd.W.frobenius(zd.w1)


def test_length_strata():
    zd = siegel(3)
    s0, hat0 = length_strata(zd, 0)
    assert [w.word for w in s0] == [()] == [w.word for w in hat0]
    top = zd.top.length
    _, hat = length_strata(zd, top)
    assert hat == zd.iw
    for j in range(top + 1):
        s_j, hat_j = length_strata(zd, j)
        assert set(hat_j) == {w for i in range(j + 1) for w in length_strata(zd, i)[0]}
    with pytest.raises(ValueError):
        length_strata(zd, top + 1)


def test_truncation_stays_in_quotient():
    zd = siegel(3)
    members = set(zd.iw)
    for w in zd.iw[1:]:
        t = truncation(zd, w)
        assert t in members and t.length == w.length - 1
    with pytest.raises(ValueError):
        truncation(zd, zd.W.identity)
