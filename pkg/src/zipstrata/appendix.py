"""Hodge characters from weight multisets and the quasi-constancy checks for
special-vertex fundamental weights."""

from dataclasses import dataclass
from fractions import Fraction

from .characters import is_quasi_constant, orbit_values
from .rootdata import build_root_datum, fundamental_weights, is_minuscule, pair, special_simple_roots, vec
from .weyl import coroot_orbits


@dataclass(frozen=True)
class WeightMultiset:
    entries: tuple  # of (weight, multiplicity)

    @classmethod
    def of(cls, pairs):
        out = []
        for w, m in pairs:
            if not isinstance(m, int) or m <= 0:
                raise ValueError("multiplicities must be positive integers")
            out.append((vec(w), m))
        return cls(tuple(out))

    @property
    def dimension(self):
        return sum(m for _, m in self.entries)

    def as_dict(self):
        d = {}
        for w, m in self.entries:
            d[w] = d.get(w, 0) + m
        return d

    def is_self_dual(self, central):
        """Closed under xi -> central - xi, multiplicities included."""
        d = self.as_dict()
        c = vec(central)
        return all(d.get(tuple(a - b for a, b in zip(c, w)), 0) == m for w, m in d.items())

    def scaled(self, k):
        return WeightMultiset(tuple((w, m * k) for w, m in self.entries))


def merge(top, bottom):
    return WeightMultiset(top.entries + bottom.entries)


def mu_split(wm, mu):
    """Split into the weights pairing to a+1 (top) and to a (bottom)."""
    mu = vec(mu)
    values = sorted({pair(w, mu) for w, _ in wm.entries})
    if len(values) != 2 or values[1] - values[0] != 1:
        raise ValueError(f"mu-pairings must be two consecutive values, got {values}")
    a = values[0]
    top = WeightMultiset(tuple(e for e in wm.entries if pair(e[0], mu) == a + 1))
    bottom = WeightMultiset(tuple(e for e in wm.entries if pair(e[0], mu) == a))
    return top, bottom, a


def hodge_character(wm, mu):
    top, _, _ = mu_split(wm, mu)
    dim = len(wm.entries[0][0])
    total = [Fraction(0)] * dim
    for w, m in top.entries:
        total = [t - m * x for t, x in zip(total, w)]
    return tuple(total)


def top_half_positivity_check(wm, mu, special_coroots):
    """Violations of: top weights pair >= 0 with every special coroot, and a
    weight pairing > 0 with some special coroot lies in the top half."""
    if not wm.entries:
        return []
    top, _, _ = mu_split(wm, mu)
    top_weights = {w for w, _ in top.entries}
    out = []
    for w, _ in wm.entries:
        for c in special_coroots:
            v = pair(w, c)
            if w in top_weights and v < 0:
                out.append(f"top weight {_fmt(w)} pairs {v} with {_fmt(c)}")
            if w not in top_weights and v > 0:
                out.append(f"weight {_fmt(w)} pairs {v} with {_fmt(c)} but is not in the top half")
    return out


def _fmt(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def symplectic_weights(rd):
    """Weights of the standard representation of a type C datum.

    With a similitude coordinate: e_i and e_0 - e_i.  Without one (possibly a
    product of copies): +-e_k for every lattice coordinate.
    """
    if rd.series != "C":
        raise ValueError("standard symplectic weights need a type C datum")
    dim = rd.dim
    unit = lambda k: tuple(int(j == k) for j in range(dim))
    if rd.similitude:
        ws = [unit(i) for i in range(1, dim)] + [
            tuple(a - b for a, b in zip(unit(0), unit(i))) for i in range(1, dim)]
    else:
        ws = [unit(k) for k in range(dim)] + [tuple(-x for x in unit(k)) for k in range(dim)]
    return WeightMultiset.of((w, 1) for w in ws)


def siegel_mu(g):
    return (1,) * (g + 1)


def factor_multiplicities(rd, mu, eta):
    """Per Dynkin component, <eta, alpha^vee> for its simple roots outside the Levi.

    Each component must have exactly one such root, and it must be special.
    """
    mu = vec(mu)
    special = set(special_simple_roots(rd))
    out = []
    for comp in rd.components:
        outside = [i for i in comp if pair(rd.simple_roots[i], mu) != 0]
        if len(outside) != 1 or outside[0] not in special:
            raise ValueError(f"component {comp} does not have a single special non-Levi root")
        out.append(pair(eta, rd.simple_coroots[outside[0]]))
    return out


# squared Euclidean length of the long coroots, per series (data without similitude)
_LONG_COROOT_NORM = {"B": 4, "C": 2}
_MAX_RANK = {"A": 8, "B": 8, "C": 8, "D": 8}
_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 3}


@dataclass(frozen=True)
class VertexRow:
    series: str
    rank: int
    vertex: int  # 1-based
    weight: tuple
    value_sets: tuple
    quasi_constant: bool
    minuscule: bool
    pattern_ok: bool

    @property
    def ok(self):
        return self.quasi_constant and self.pattern_ok


def _pattern(rd, f):
    """Long/short value pattern: long coroots give {0,2}, short give {0,1}."""
    if rd.series in ("A", "D") or rd.rank == 1:
        # rank one has a single coroot length and is type A in disguise
        return is_minuscule(rd, f)
    long_norm = _LONG_COROOT_NORM[rd.series]
    for orbit in coroot_orbits(rd):
        is_long = sum(x * x for x in orbit[0]) == long_norm
        allowed = {0, 2} if is_long else {0, 1}
        if not {abs(pair(f, c)) for c in orbit} <= allowed:
            return False
    return True


def verify_special_fundamental_quasi_constant(series, max_rank):
    if series not in _MAX_RANK:
        raise ValueError(f"unknown series {series!r}")
    if max_rank > _MAX_RANK[series]:
        raise ValueError(f"max_rank must be at most {_MAX_RANK[series]}")
    rows = []
    for n in range(_MIN_RANK[series], max_rank + 1):
        rd = build_root_datum(series, n)
        fws = fundamental_weights(rd)
        for i in special_simple_roots(rd):
            f = fws[i]
            rows.append(VertexRow(
                series, n, i + 1, f,
                tuple(tuple(v) for v in orbit_values(rd, f)),
                is_quasi_constant(rd, f),
                is_minuscule(rd, f),
                _pattern(rd, f),
            ))
    return rows
