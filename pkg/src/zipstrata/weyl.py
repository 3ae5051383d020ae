"""Exact Weyl group arithmetic on the character lattice.

Elements are integer matrices acting on character coordinates, stored
together with their inverse.  Words are tuples of 0-based simple-reflection
indices; ``w.word`` is always the lexicographically smallest reduced word.
"""

from functools import lru_cache

import numpy as np

from . import linalg
from .rootdata import pair


class WeylElement:
    __slots__ = ("W", "matrix", "inv", "_length", "_word")

    def __init__(self, W, matrix, inv):
        self.W = W
        self.matrix = matrix
        self.inv = inv
        self._length = None
        self._word = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "e" if not self.word else "s" + "s".join(str(i + 1) for i in self.word)

    def __mul__(self, other):
        return WeylElement(self.W, linalg.matmul(self.matrix, other.matrix),
                           linalg.matmul(other.inv, self.inv))

    def inverse(self):
        return WeylElement(self.W, self.inv, self.matrix)

    def __call__(self, chi):
        return linalg.matvec(self.matrix, chi)

    def act_cochar(self, c):
        return linalg.matvec(linalg.transpose(self.inv), c)

    @property
    def is_identity(self):
        return self.matrix == self.W.identity.matrix

    @property
    def length(self):
        if self._length is None:
            r = linalg.matvec(linalg.transpose(self.matrix), self.W.h)
            self._length = sum(1 for a in self.W.rd.positive_roots if linalg.dot(r, a) < 0)
        return self._length

    def sends_positive(self, i):
        """True when w(alpha_i) is a positive root, i.e. l(w s_i) > l(w)."""
        r = linalg.dot(linalg.matvec(self.matrix, self.W.alphas[i]), self.W.h)
        return r > 0

    def inverse_sends_positive(self, i):
        """True when w^-1(alpha_i) is positive, i.e. l(s_i w) > l(w)."""
        return linalg.dot(linalg.matvec(self.inv, self.W.alphas[i]), self.W.h) > 0

    def right_descents(self):
        return [i for i in range(self.W.n) if not self.sends_positive(i)]

    def left_descents(self):
        return [i for i in range(self.W.n) if not self.inverse_sends_positive(i)]

    @property
    def word(self):
        if self._word is None:
            W = self.W
            word, inv = [], self.inv
            for _ in range(self.length):
                for i in range(W.n):
                    if linalg.dot(linalg.matvec(inv, W.alphas[i]), W.h) < 0:
                        word.append(i)
                        inv = W._right_reflect(inv, i)
                        break
            self._word = tuple(word)
        return self._word


class WeylGroup:
    """The Weyl group of a root datum, with memoized Bruhat comparisons."""

    def __init__(self, rd):
        self.rd = rd
        self.n = rd.rank
        self.dim = rd.dim
        self.alphas = rd.simple_roots
        self.coalphas = rd.simple_coroots
        self.h = rd.height_form
        eye = linalg.identity(rd.dim)
        self.identity = WeylElement(self, eye, eye)
        self.identity._length, self.identity._word = 0, ()
        self.gens = []
        for i in range(self.n):
            m = self._left_reflect(eye, i)
            g = WeylElement(self, m, m)
            g._length, g._word = 1, (i,)
            self.gens.append(g)
        self._bruhat = {}

    def _left_reflect(self, m, i):
        a, c = self.alphas[i], self.coalphas[i]
        r = [sum(c[j] * m[j][k] for j in range(self.dim)) for k in range(self.dim)]
        return tuple(tuple(m[j][k] - a[j] * r[k] for k in range(self.dim)) for j in range(self.dim))

    def _right_reflect(self, m, i):
        a, c = self.alphas[i], self.coalphas[i]
        v = [sum(m[j][k] * a[k] for k in range(self.dim)) for j in range(self.dim)]
        return tuple(tuple(m[j][k] - v[j] * c[k] for k in range(self.dim)) for j in range(self.dim))

    def s(self, i):
        return self.gens[i]

    def lmul(self, i, w):
        """s_i * w"""
        return WeylElement(self, self._left_reflect(w.matrix, i), self._right_reflect(w.inv, i))

    def rmul(self, w, i):
        """w * s_i"""
        return WeylElement(self, self._right_reflect(w.matrix, i), self._left_reflect(w.inv, i))

    def element(self, word):
        w = self.identity
        for i in word:
            if not 0 <= i < self.n:
                raise IndexError(f"simple reflection index {i} out of range")
            w = self.rmul(w, i)
        return w

    def longest(self, subset=None):
        subset = range(self.n) if subset is None else sorted(subset)
        w = self.identity
        grew = True
        while grew:
            grew = False
            for i in subset:
                if w.sends_positive(i):
                    w = self.rmul(w, i)
                    grew = True
        return w

    def bruhat_leq(self, u, w):
        key = (u.matrix, w.matrix)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if u.length > w.length:
            res = False
        elif w.length == 0:
            res = u.is_identity
        elif u.length == w.length:
            res = u == w
        else:
            i = w.right_descents()[0]
            ws = self.rmul(w, i)
            if u.sends_positive(i):
                res = self.bruhat_leq(u, ws)
            else:
                res = self.bruhat_leq(self.rmul(u, i), ws)
        self._bruhat[key] = res
        return res

    def in_left_quotient(self, w, subset):
        """w is minimal in W_I w."""
        return all(w.inverse_sends_positive(i) for i in subset)

    def in_right_quotient(self, w, subset):
        """w is minimal in w W_I."""
        return all(w.sends_positive(i) for i in subset)

    def min_coset_reps(self, subset, side="left"):
        """Minimal length representatives: left -> ^I W, right -> W^I.

        Grown by single letters from the identity, so W itself is never built.
        """
        subset = sorted(subset)
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        level, found = [self.identity], {self.identity}
        while level:
            nxt = []
            for w in level:
                for j in range(self.n):
                    if side == "left":
                        if not w.sends_positive(j):
                            continue
                        x = self.rmul(w, j)
                        ok = self.in_left_quotient(x, subset)
                    else:
                        if not w.inverse_sends_positive(j):
                            continue
                        x = self.lmul(j, w)
                        ok = self.in_right_quotient(x, subset)
                    if ok and x not in found:
                        x._length = w.length + 1
                        found.add(x)
                        nxt.append(x)
            level = nxt
        return sorted(found, key=lambda w: (w.length, w.word))

    def parabolic_decomposition(self, w, subset):
        """Return (u, x) with w = u x, u in W_I and x in ^I W."""
        x = w
        moved = True
        while moved:
            moved = False
            for i in subset:
                if not x.inverse_sends_positive(i):
                    x = self.lmul(i, x)
                    moved = True
        return w * x.inverse(), x

    def enumerate(self, cap=None):
        """Yield every element once, in order of increasing length."""
        level, seen = [self.identity], {self.identity}
        count = 0
        while level:
            nxt = []
            for w in level:
                count += 1
                if cap is not None and count > cap:
                    raise OverflowError(f"Weyl group order exceeds cap {cap}")
                yield w
                for j in range(self.n):
                    if w.inverse_sends_positive(j):
                        x = self.lmul(j, w)
                        if x not in seen:
                            x._length = w.length + 1
                            seen.add(x)
                            nxt.append(x)
            level = nxt

    def subgroup(self, subset):
        """Elements of the standard parabolic subgroup W_I."""
        level, seen = [self.identity], {self.identity}
        while level:
            nxt = []
            for w in level:
                for j in subset:
                    x = self.rmul(w, j)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            level = nxt
        return seen

    def frobenius(self, w, power=1):
        """phi(w) = F^-1 w F."""
        f, finv = self.rd.galois, self.rd.galois_inverse
        if power < 0:
            f, finv = finv, f
        for _ in range(abs(power)):
            w = WeylElement(self, linalg.matmul(finv, linalg.matmul(w.matrix, f)),
                            linalg.matmul(finv, linalg.matmul(w.inv, f)))
        return w


@lru_cache(maxsize=None)
def weyl_group(rd):
    return WeylGroup(rd)


def reflection(rd, i):
    return weyl_group(rd).s(i)


def compose(u, v):
    return u * v


def inverse(w):
    return w.inverse()


def apply(w, chi):
    if len(chi) != w.W.dim:
        raise ValueError("rank mismatch")
    return w(chi)


def apply_cochar(w, c):
    if len(c) != w.W.dim:
        raise ValueError("rank mismatch")
    return w.act_cochar(c)


def longest_element(rd, subset=None):
    return weyl_group(rd).longest(subset)


def bruhat_leq(u, w):
    return u.W.bruhat_leq(u, w)


def min_coset_reps(rd, subset, side="left"):
    return weyl_group(rd).min_coset_reps(subset, side)


def enumerate_weyl(rd, cap=None):
    return weyl_group(rd).enumerate(cap)


def frobenius_on_weyl(rd, w):
    return weyl_group(rd).frobenius(w)


def element(rd, word):
    return weyl_group(rd).element(word)


def coroot_orbits(rd):
    """Partition of all coroots into orbits of W extended by F."""
    W = weyl_group(rd)
    remaining = list(rd.coroots)
    left = set(remaining)
    orbits = []
    for start in remaining:
        if start not in left:
            continue
        orbit, todo = {start}, [start]
        while todo:
            c = todo.pop()
            imgs = [tuple(rd.galois_cochar(c))]
            for i in range(rd.rank):
                k = pair(rd.simple_roots[i], c)
                imgs.append(tuple(x - k * y for x, y in zip(c, W.coalphas[i])))
            for d in imgs:
                d = tuple(int(x) for x in d)
                if d not in orbit:
                    orbit.add(d)
                    todo.append(d)
        left -= orbit
        orbits.append(tuple(c for c in rd.coroots if c in orbit))
    return orbits


def orbit_levels(rd, cap=None):
    """Vectorized enumeration of W through the orbit of 2*rho.

    Since rho is regular, w -> w(2 rho) is injective.  Each orbit point is
    stored by its pairings with the simple coroots, and ``s_j w`` is kept only
    when j is the smallest left descent of ``s_j w``, so every element is
    produced exactly once with no deduplication pass.  Yields
    ``(length, rows)`` where ``rows`` is an int64 array of those pairings for
    every element of that length.
    """
    cartan = np.array([[int(pair(a, c)) for c in rd.simple_coroots] for a in rd.simple_roots],
                      dtype=np.int64)
    level = np.full((1, rd.rank), 2, dtype=np.int64)
    length, total = 0, 0
    while len(level):
        total += len(level)
        if cap is not None and total > cap:
            raise OverflowError(f"Weyl group order exceeds cap {cap}")
        yield length, level
        parts = []
        for j in range(rd.rank):
            rows = level[level[:, j] > 0]
            if not len(rows):
                continue
            new = rows - rows[:, j, None] * cartan[j]
            if j:
                new = new[(new[:, :j] > 0).all(axis=1)]
            parts.append(new)
        level = np.concatenate(parts) if parts else level[:0]
        length += 1


def weyl_order(rd):
    return sum(len(rows) for _, rows in orbit_levels(rd))


def length_distribution(rd, cap=None):
    """Number of elements of each length, by full enumeration."""
    return [len(rows) for _, rows in orbit_levels(rd, cap)]
