"""Zip-datum combinatorics: parabolic types, distinguished Weyl elements,
the stratum table indexed by ^I W and the length stratification."""

from dataclasses import dataclass, field
from functools import cached_property

from .rootdata import pair, vec
from .weyl import weyl_group


@dataclass(frozen=True)
class ZipDatum:
    rd: object
    mu: tuple
    K: tuple
    I: tuple
    J: tuple
    w0: object = field(repr=False)
    w0I: object = field(repr=False)
    w1: object = field(repr=False)
    w0L: object = field(repr=False)
    w0M: object = field(repr=False)

    @property
    def W(self):
        return weyl_group(self.rd)

    @cached_property
    def iw(self):
        """^I W in (length, word) order."""
        return self.W.min_coset_reps(self.I, "left")

    @cached_property
    def wj(self):
        """W^J in (length, word) order."""
        return self.W.min_coset_reps(self.J, "right")

    @property
    def top(self):
        """The maximal element w0,I w0 of ^I W."""
        return self.w0I * self.w0


@dataclass(frozen=True)
class StratumRecord:
    w: object
    length: int
    dimension: int
    minimal_partner: object
    cominimal_partner: object
    involution_image: object


def _simple_index(rd, root):
    try:
        return rd.simple_roots.index(tuple(root))
    except ValueError:
        raise AssertionError(f"{root} is not a simple root") from None


def make_zip_datum(rd, mu):
    mu = vec(mu)
    if len(mu) != rd.dim:
        raise ValueError(f"mu has {len(mu)} coordinates, expected {rd.dim}")
    pairings = [pair(a, mu) for a in rd.simple_roots]
    bad = [i + 1 for i, v in enumerate(pairings) if v < 0]
    if bad:
        raise ValueError(f"mu is not dominant: negative on simple roots {bad}")
    W = weyl_group(rd)
    K = tuple(i for i, v in enumerate(pairings) if v == 0)
    w0 = W.longest()
    I = tuple(sorted(_simple_index(rd, tuple(-x for x in w0(rd.simple_roots[i]))) for i in K))
    finv = rd.galois_inverse
    J = tuple(sorted(_simple_index(rd, tuple(sum(r[k] * rd.simple_roots[i][k] for k in range(rd.dim))
                                              for r in finv)) for i in K))
    w0I = W.longest(I)
    w0L = W.longest(K)
    w0M = W.longest(J)
    if w0L != w0 * w0I * w0:
        raise AssertionError("w0,L differs from w0 w0,I w0")
    if w0M != W.frobenius(w0L):
        raise AssertionError("w0,M differs from phi(w0,L)")
    return ZipDatum(rd, mu, K, I, J, w0, w0I, w0 * w0I, w0L, w0M)


def twist_parabolic(zd, u):
    """The twist u -> w0 phi(w0,I u w0,I) w0 carrying W_I onto W_J."""
    return zd.w0 * zd.W.frobenius(zd.w0I * u * zd.w0I) * zd.w0


def match_dual(zd, y):
    """Send y in W^J to the element of ^I W indexing the same orbit.

    Repeatedly split z = u x with u in W_I, x in ^I W and replace z by
    x * twist(u) until the parabolic part is trivial.
    """
    W = zd.W
    z, seen = y, set()
    while True:
        if z in seen:
            raise AssertionError(f"orbit matching cycles from {y!r}")
        seen.add(z)
        u, x = W.parabolic_decomposition(z, zd.I)
        if u.is_identity:
            return x
        z = x * twist_parabolic(zd, u)


def dual_matching(zd):
    """Dict from ^I W to its W^J partner; asserted to be a length-preserving bijection."""
    out = {}
    for y in zd.wj:
        x = match_dual(zd, y)
        if x in out:
            raise AssertionError(f"{x!r} is matched twice")
        if x.length != y.length:
            raise AssertionError(f"matching {y!r} -> {x!r} changes length")
        out[x] = y
    if len(out) != len(zd.iw):
        raise AssertionError("matching is not onto ^I W")
    return out


def minimal_elements(zd):
    return [zd.w0 * w * zd.w0 for w in zd.iw]


def cominimal_elements(zd):
    return [zd.w0 * y * zd.w0 for y in zd.wj]


def cominimal_for(zd, w):
    """Cominimal element attached to the stratum w in ^I W."""
    return zd.w0 * _matching(zd)[w] * zd.w0


_MATCH_CACHE = {}


def _matching(zd):
    key = (zd.rd, zd.mu)
    if key not in _MATCH_CACHE:
        _MATCH_CACHE[key] = dual_matching(zd)
    return _MATCH_CACHE[key]


def strata_table(zd, max_order=None):
    if max_order is not None and len(zd.iw) > max_order:
        raise OverflowError(f"|^I W| = {len(zd.iw)} exceeds budget {max_order}")
    matching = _matching(zd)
    rows = []
    for w in zd.iw:
        rows.append(StratumRecord(
            w=w,
            length=w.length,
            dimension=w.length,
            minimal_partner=zd.w0 * w * zd.w0,
            cominimal_partner=zd.w0 * matching[w] * zd.w0,
            involution_image=zd.w0I * w * zd.w0,
        ))
    return rows


def length_strata(zd, j):
    top = zd.top.length
    if not 0 <= j <= top:
        raise ValueError(f"j must lie in 0..{top}")
    s_j = [w for w in zd.iw if w.length == j]
    hat = [w for w in zd.iw if w.length <= j]
    return s_j, hat


def truncation(zd, w):
    """Drop the last letter of the reduced word; stays inside ^I W."""
    if w.length == 0:
        raise ValueError("the identity has no truncation")
    return zd.W.element(w.word[:-1])
