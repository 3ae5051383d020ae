"""Character predicates and cones: dominance, regularity, ampleness,
orbital p-closeness, quasi-constancy, cohomology degree and cone membership."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .rootdata import pair, vec
from .weyl import coroot_orbits


def _check(rd, chi):
    chi = vec(chi)
    if len(chi) != rd.dim:
        raise ValueError(f"character has {len(chi)} coordinates, expected {rd.dim}")
    return chi


def is_dominant(rd, chi, subset=None):
    chi = _check(rd, chi)
    idx = range(rd.rank) if subset is None else subset
    return all(pair(chi, rd.simple_coroots[i]) >= 0 for i in idx)


def is_regular(rd, chi, coroots=None):
    return is_delta_regular(rd, chi, 0, coroots)


def is_delta_regular(rd, chi, delta, coroots=None):
    chi = _check(rd, chi)
    coroots = rd.coroots if coroots is None else coroots
    return all(abs(pair(chi, c)) > delta for c in coroots)


def is_l_character(zd, chi):
    chi = _check(zd.rd, chi)
    return all(pair(chi, zd.rd.simple_coroots[i]) == 0 for i in zd.K)


def require_l_character(zd, chi):
    chi = _check(zd.rd, chi)
    if not is_l_character(zd, chi):
        raise ValueError("character is not a character of L: it pairs nonzero with a Levi coroot")
    return chi


def ample_indices(zd):
    """Simple roots outside the Levi type (Delta minus K)."""
    return tuple(i for i in range(zd.rd.rank) if i not in zd.K)


def is_ample(zd, chi):
    chi = require_l_character(zd, chi)
    return all(pair(chi, zd.rd.simple_coroots[i]) < 0 for i in ample_indices(zd))


def orbit_values(rd, chi):
    """Per coroot orbit, the sorted set of absolute pairings with chi."""
    chi = _check(rd, chi)
    return [sorted({abs(pair(chi, c)) for c in orbit}) for orbit in coroot_orbits(rd)]


def max_orbit_ratio(rd, chi):
    """Largest ratio of nonzero absolute pairings inside one orbit (1 if none)."""
    best = Fraction(1)
    for vals in orbit_values(rd, chi):
        nz = [v for v in vals if v]
        if nz:
            best = max(best, Fraction(max(nz)) / min(nz))
    return best


def is_orbitally_p_close(rd, chi, p):
    return max_orbit_ratio(rd, chi) <= p - 1


def min_p_close(rd, chi):
    """Smallest b such that chi is orbitally p-close for every p >= b.

    Returns 1 when every pairing vanishes, meaning all p.
    """
    if all(v == 0 for vals in orbit_values(rd, chi) for v in vals):
        return 1
    return 1 + ceil(max_orbit_ratio(rd, chi))


def is_quasi_constant(rd, chi):
    return all(len([v for v in vals if v]) <= 1 for vals in orbit_values(rd, chi))


@dataclass(frozen=True)
class ChamberSpec:
    witness: tuple


def cohomology_degree(rd, chamber):
    w = _check(rd, chamber.witness)
    if not is_regular(rd, w):
        raise ValueError("chamber witness is not regular")
    return sum(1 for c in rd.positive_coroots if pair(w, c) < 0)


@dataclass(frozen=True)
class ConeFlags:
    in_C: bool
    sign_pattern: bool
    in_A_p: bool
    in_C_plusplus: bool


def sign_pattern(zd, chi):
    """Positive on the Levi simple coroots, negative on the others."""
    vals = [pair(chi, c) for c in zd.rd.simple_coroots]
    return all((v > 0) if i in zd.K else (v < 0) for i, v in enumerate(vals))


def in_cone_C(zd, chi):
    """w0,L chi is regular and anti-dominant."""
    chi = _check(zd.rd, chi)
    x = zd.w0L(chi)
    return all(pair(x, c) < 0 for c in zd.rd.positive_coroots)


def in_cone_C_plusplus(zd, chi, p):
    from .frobenius import FrobeniusModel, h_inverse
    lam = h_inverse(FrobeniusModel(zd.rd, p), zd.w0M, _check(zd.rd, chi))
    return is_dominant(zd.rd, lam)


def cone_tests(zd, chi, p):
    chi = _check(zd.rd, chi)
    in_c = in_cone_C(zd, chi)
    return ConeFlags(
        in_C=in_c,
        sign_pattern=sign_pattern(zd, chi),
        in_A_p=in_c and is_orbitally_p_close(zd.rd, chi, p),
        in_C_plusplus=in_cone_C_plusplus(zd, chi, p),
    )
