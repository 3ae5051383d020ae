"""Chevalley divisors on Schubert closures and positivity certificates for
Hasse invariants on stratum closures."""

from dataclasses import dataclass

from . import linalg
from .characters import (
    is_ample, is_dominant, is_orbitally_p_close, is_regular, require_l_character,
)
from .frobenius import h_inverse, h_map
from .rootdata import pair, vec
from .weyl import WeylElement, weyl_group
from .zipdata import cominimal_for

EXISTS = "exists"
NO_PROMISE = "no-promise"
INCONSISTENT = "INTERNAL-INCONSISTENCY"


@dataclass(frozen=True)
class DivisorEntry:
    alpha: tuple
    target: WeylElement
    coeff: object


@dataclass(frozen=True)
class ChevalleyDivisor:
    w: WeylElement
    entries: tuple

    @property
    def coefficients(self):
        return [e.coeff for e in self.entries]


@dataclass(frozen=True)
class CertificateFlags:
    ample: bool
    orbitally_p_close: bool
    all_coeffs_positive: bool


@dataclass(frozen=True)
class HasseCertificate:
    chi: tuple
    p: int
    stratum_w: WeylElement
    cominimal: WeylElement
    N: int
    lam: tuple
    divisor: ChevalleyDivisor
    flags: CertificateFlags
    verdict: str


def root_reflection(rd, alpha):
    W = weyl_group(rd)
    c = rd.coroot(alpha)
    m = tuple(tuple(int(i == j) - alpha[i] * c[j] for j in range(rd.dim)) for i in range(rd.dim))
    return WeylElement(W, m, m)


def chevalley_support(rd, w):
    """Pairs (alpha, w w0 s_alpha w0) for positive alpha dropping the length by one."""
    W = weyl_group(rd)
    w0 = W.longest()
    out = []
    for alpha in rd.positive_roots:
        target = w * w0 * root_reflection(rd, alpha) * w0
        if target.length == w.length - 1:
            out.append((alpha, target))
    return out


def chevalley_divisor(rd, w, lam):
    lam = vec(lam)
    ww0 = w * weyl_group(rd).longest()
    entries = tuple(
        DivisorEntry(alpha, target, pair(lam, ww0.act_cochar(rd.coroot(alpha))))
        for alpha, target in chevalley_support(rd, w)
    )
    return ChevalleyDivisor(w, entries)


def sections_on_closure(rd, w, lam):
    return all(c >= 0 for c in chevalley_divisor(rd, w, lam).coefficients)


def hasse_certificate(zd, fm, chi, w_stratum):
    chi = require_l_character(zd, chi)
    W = zd.W
    c = cominimal_for(zd, w_stratum)
    v = W.frobenius(zd.w1) * c.inverse()
    lam0 = h_inverse(fm, v, chi)
    n = linalg.common_denominator(lam0)
    lam = tuple(n * x for x in lam0)
    if h_map(fm, v, lam) != tuple(n * x for x in chi):
        raise AssertionError("h-inverse failed to invert")
    divisor = chevalley_divisor(zd.rd, c, lam)
    flags = CertificateFlags(
        ample=is_ample(zd, chi),
        orbitally_p_close=is_orbitally_p_close(zd.rd, chi, fm.p),
        all_coeffs_positive=all(x > 0 for x in divisor.coefficients),
    )
    if flags.all_coeffs_positive:
        verdict = EXISTS
    elif flags.ample and (flags.orbitally_p_close or c == W.frobenius(zd.w1)):
        verdict = INCONSISTENT
    else:
        verdict = NO_PROMISE
    return HasseCertificate(chi, fm.p, w_stratum, c, n, lam, divisor, flags, verdict)


def weight_shift_search(zd, eta, eta_omega, chi_eta, k, a_max):
    """Smallest a in 0..a_max with -w0,L(eta + a eta_omega + k chi_eta)
    dominant and regular, or None.  Every a is tested; no monotonicity is assumed."""
    if a_max < 0:
        raise ValueError("a_max must be nonnegative")
    eta, eta_omega, chi_eta = vec(eta), vec(eta_omega), vec(chi_eta)
    for a in range(a_max + 1):
        x = tuple(e + a * o + k * c for e, o, c in zip(eta, eta_omega, chi_eta))
        y = tuple(-t for t in zd.w0L(x))
        if is_dominant(zd.rd, y) and is_regular(zd.rd, y):
            return a
    return None
