
import pytest

from zipstrata.characters import cone_tests, is_dominant, is_regular
from zipstrata.frobenius import FrobeniusModel, h_map
from zipstrata.hasse import (
    EXISTS, INCONSISTENT, NO_PROMISE, chevalley_divisor, chevalley_support, hasse_certificate,
    sections_on_closure, weight_shift_search,
)
from zipstrata.rootdata import build_root_datum, rho
from zipstrata.serialize import certificate_to_json
from zipstrata.weyl import weyl_group
from zipstrata.zipdata import make_zip_datum, strata_table


def test_support_identity_empty():
    rd = build_root_datum("C", 3)
    assert chevalley_support(rd, weyl_group(rd).identity) == []


def test_rank_one():
    rd = build_root_datum("A", 1)
    s = weyl_group(rd).s(0)
    (entry,) = chevalley_divisor(rd, s, (3, -1)).entries
    assert entry.alpha == rd.simple_roots[0]
    assert entry.target.is_identity
    assert entry.coeff == 4


def test_longest_c2():
    rd = build_root_datum("C", 2)
    W = weyl_group(rd)
    w0 = W.longest()
    support = chevalley_support(rd, w0)
    targets = [t for _, t in support]
    coatoms = [w for w in W.enumerate() if w.length == 3]
    assert sorted(targets, key=lambda w: w.word) == sorted(coatoms, key=lambda w: w.word)
    assert len(set(targets)) == len(targets)


def test_divisor_targets():
    rd = build_root_datum("B", 3)
    W = weyl_group(rd)
    for w in W.enumerate():
        div = chevalley_divisor(rd, w, rho(rd))
        targets = [e.target for e in div.entries]
        assert len(set(targets)) == len(targets)
        for t in targets:
            assert t.length == w.length - 1 and W.bruhat_leq(t, w)


def test_sections_on_closure():
    rd = build_root_datum("A", 2)
    W = weyl_group(rd)
    w0 = W.longest()
    assert sections_on_closure(rd, w0, (0, 0, 0))
    assert sections_on_closure(rd, w0, (2, 1, 0))
    assert not sections_on_closure(rd, w0, (0, 1, 2))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_siegel_hodge_certificates(siegel_c2, p):
    zd = siegel_c2
    fm = FrobeniusModel(zd.rd, p)
    eta = (0, -1, -1)
    for row in strata_table(zd):
        cert = hasse_certificate(zd, fm, eta, row.w)
        assert cert.verdict == EXISTS and cert.flags.all_coeffs_positive
        assert cert.flags.ample and cert.flags.orbitally_p_close
        v = zd.W.frobenius(zd.w1) * cert.cominimal.inverse()
        assert h_map(fm, v, cert.lam) == tuple(cert.N * x for x in eta)
        assert all(x.denominator == 1 for x in cert.lam)
        assert sections_on_closure(zd.rd, cert.cominimal, cert.lam)


def test_certificate_json(siegel_c2):
    zd = siegel_c2
    cert = hasse_certificate(zd, FrobeniusModel(zd.rd, 3), (0, -1, -1), zd.top)
    data = certificate_to_json(cert)
    assert set(data) == {"chi", "p", "stratum", "cominimal", "N", "lambda", "divisor", "flags", "verdict"}
    assert data["stratum"] == [2, 1, 2]
    assert all(isinstance(x, str) for x in data["lambda"])


def test_rejects_non_levi_character(siegel_c2):
    with pytest.raises(ValueError):
        hasse_certificate(siegel_c2, FrobeniusModel(siegel_c2.rd, 3), (0, 1, 0), siegel_c2.top)


def test_non_ample_has_no_promise(siegel_c2):
    zd = siegel_c2
    verdicts = {hasse_certificate(zd, FrobeniusModel(zd.rd, 3), (0, 1, 1), r.w).verdict
                for r in strata_table(zd)}
    assert INCONSISTENT not in verdicts and NO_PROMISE in verdicts


def test_open_stratum_without_p_close():
    zd = make_zip_datum(build_root_datum("C", 2, True), (0, 2, 1))
    fm = FrobeniusModel(zd.rd, 2)
    chi = (0, -3, -1)
    cert = hasse_certificate(zd, fm, chi, zd.top)
    assert cert.flags.ample and not cert.flags.orbitally_p_close
    assert cert.flags.all_coeffs_positive
    others = [hasse_certificate(zd, fm, chi, r.w) for r in strata_table(zd)]
    assert all(c.verdict != INCONSISTENT for c in others)


def test_weight_shift_search(siegel_c2):
    zd = siegel_c2
    zero = (0, 0, 0)
    eta = tuple(-x for x in zd.w0L(rho(zd.rd)))
    assert weight_shift_search(zd, eta, zero, zero, 1, 5) == 0
    assert weight_shift_search(zd, zero, (0, -1, -1), zero, 1, 20) is None
    chi_eta = (0, -1, -2)
    assert cone_tests(zd, chi_eta, 5).in_C_plusplus
    a = weight_shift_search(zd, (0, 3, 3), (0, -1, -1), chi_eta, 1, 20)
    assert a == 3
    x = tuple(e + a * o + c for e, o, c in zip((0, 3, 3), (0, -1, -1), chi_eta))
    y = tuple(-t for t in zd.w0L(x))

    assert is_dominant(zd.rd, y) and is_regular(zd.rd, y)
    with pytest.raises(ValueError):
        weight_shift_search(zd, zero, zero, zero, 1, -1)
