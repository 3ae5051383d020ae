"""The Frobenius-twisted character calculus: lambda o phi = p F(lambda),
phi(w) = F^-1 w F, and the maps h_w(lambda) = lambda - (w lambda) o phi."""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rootdata import vec
from .weyl import weyl_group


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FrobeniusModel:
    rd: object
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")

    @property
    def order(self):
        """Order m of the lattice automorphism F."""
        return self.rd.galois_order


def frobenius_twist(fm, lam, power=1):
    """lambda o phi^power (power may be negative)."""
    lam = vec(lam)
    return tuple(Fraction(fm.p) ** power * x for x in fm.rd.galois_char(lam, power))


def frobenius_untwist(fm, lam):
    return frobenius_twist(fm, lam, -1)


def h_map(fm, w, lam):
    lam = vec(lam)
    return tuple(a - b for a, b in zip(lam, frobenius_twist(fm, w(lam))))


def h_matrix(fm, w):
    """Matrix of h_w on character coordinates: 1 - p F M_w."""
    fw = linalg.matmul(fm.rd.galois, w.matrix)
    n = fm.rd.dim
    return tuple(tuple(int(i == j) - fm.p * fw[i][j] for j in range(n)) for i in range(n))


def h_inverse(fm, w, chi):
    """Exact inverse of h_w by solving the linear system."""
    return linalg.solve(h_matrix(fm, w), vec(chi))


def twisted_power(fm, w, r):
    """w^(r) = phi^(r-1)(w) ... phi(w) w, with w^(0) = e."""
    W = weyl_group(fm.rd)
    acc, cur = W.identity, w
    for _ in range(r):
        acc = cur * acc
        cur = W.frobenius(cur)
    return acc


def twisted_period(fm, w):
    """Least r >= 1 with w^(r) = e."""
    W = weyl_group(fm.rd)
    acc, cur, r = w, W.frobenius(w), 1
    while not acc.is_identity:
        acc = cur * acc
        cur = W.frobenius(cur)
        r += 1
    return r


def h_inverse_closed(fm, w, chi):
    """Inverse of h_w by the finite geometric sum.

    With N = r m (r the twisted period of w, m the order of F),
    h_w^-1(chi) = -1/(p^N - 1) * sum_{i<N} (w^(i) chi) o phi^i.
    """
    chi = vec(chi)
    W = weyl_group(fm.rd)
    n_terms = twisted_period(fm, w) * fm.order
    total = [Fraction(0)] * fm.rd.dim
    acc, cur = W.identity, w
    for i in range(n_terms):
        term = frobenius_twist(fm, acc(chi), i)
        total = [a + b for a, b in zip(total, term)]
        acc = cur * acc
        cur = W.frobenius(cur)
    scale = Fraction(-1, fm.p ** n_terms - 1)
    return tuple(scale * x for x in total)


def partial_sum(fm, w, lam, r):
    """Both sides of the telescoping identity
    sum_{i<r} (w^(i) h_w(lam)) o phi^i = lam - (w^(r) lam) o phi^r."""
    lam = vec(lam)
    hl = h_map(fm, w, lam)
    lhs = [Fraction(0)] * fm.rd.dim
    for i in range(r):
        term = frobenius_twist(fm, twisted_power(fm, w, i)(hl), i)
        lhs = [a + b for a, b in zip(lhs, term)]
    rhs = [a - b for a, b in zip(lam, frobenius_twist(fm, twisted_power(fm, w, r)(lam), r))]
    return tuple(lhs), tuple(rhs)


def varphicirc_sides(fm, w, lam):
    """Both sides of w(lam o phi) = (phi(w) lam) o phi."""
    lam = vec(lam)
    W = weyl_group(fm.rd)
    return w(frobenius_twist(fm, lam)), frobenius_twist(fm, W.frobenius(w)(lam))
