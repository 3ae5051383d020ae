"""Based root data for the classical series.

Characters and cocharacters are plain tuples of exact rationals in a fixed
coordinate basis ``e_0, e_1, ...`` (characters) and its dual basis
``f_0, f_1, ...`` (cocharacters), so the pairing is the ordinary dot product.
When a similitude coordinate is present it is always coordinate 0.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg

SERIES = ("A", "B", "C", "D")


def vec(coords):
    """Coerce an iterable of ints/Fractions/strings to a rational vector."""
    out = []
    for x in coords:
        if isinstance(x, float):
            raise ValueError(f"floating point coordinate {x!r}; use ints or Fractions")
        out.append(Fraction(x))
    return tuple(out)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def pair(chi, c):
    """Exact pairing of a character with a cocharacter."""
    if len(chi) != len(c):
        raise ValueError(f"rank mismatch: {len(chi)} != {len(c)}")
    return sum((Fraction(a) * b for a, b in zip(chi, c)), Fraction(0))


@dataclass(frozen=True)
class RootDatum:
    """A based root datum with a Frobenius-type lattice automorphism.

    ``rank`` is the semisimple rank (number of simple roots); ``dim`` is the
    rank of the character lattice.  ``galois`` is the integer matrix of F
    acting on character coordinates (column j is F(e_j)).
    """

    series: str
    rank: int
    dim: int
    similitude: bool
    galois_order: int
    simple_roots: tuple
    simple_coroots: tuple
    galois: tuple
    tag: str = ""
    positive_roots: tuple = field(default=(), compare=False, repr=False)
    positive_coroots: tuple = field(default=(), compare=False, repr=False)
    root_heights: tuple = field(default=(), compare=False, repr=False)
    simple_coords: tuple = field(default=(), compare=False, repr=False)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.series, self.rank, self.dim, self.simple_roots,
                     self.simple_coroots, self.galois))

    @cached_property
    def cartan(self):
        return tuple(tuple(int(linalg.dot(a, c)) for c in self.simple_coroots)
                     for a in self.simple_roots)

    @cached_property
    def roots(self):
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def coroots(self):
        return self.positive_coroots + tuple(tuple(-x for x in r) for r in self.positive_coroots)

    @cached_property
    def coroot_map(self):
        return dict(zip(self.roots, self.coroots))

    def coroot(self, root):
        return self.coroot_map[tuple(root)]

    @cached_property
    def height_form(self):
        """Twice rho-check: pairs to twice the height with every root."""
        return tuple(sum(c[i] for c in self.positive_coroots) for i in range(self.dim))

    def is_positive(self, root):
        return linalg.dot(root, self.height_form) > 0

    @cached_property
    def galois_inverse(self):
        return tuple(tuple(int(x) for x in row) for row in linalg.inverse(self.galois))

    def galois_char(self, chi, power=1):
        m = self.galois if power >= 0 else self.galois_inverse
        for _ in range(abs(power)):
            chi = linalg.matvec(m, chi)
        return tuple(chi)

    def galois_cochar(self, c, power=1):
        # contragredient action: (F^-1)^T
        m = linalg.transpose(self.galois_inverse if power >= 0 else self.galois)
        for _ in range(abs(power)):
            c = linalg.matvec(m, c)
        return tuple(c)

    @cached_property
    def galois_simple_perm(self):
        """Index permutation of the simple roots induced by F."""
        idx = {r: i for i, r in enumerate(self.simple_roots)}
        return tuple(idx[tuple(self.galois_char(r))] for r in self.simple_roots)

    @cached_property
    def components(self):
        """Connected components of the Dynkin diagram, as sorted index tuples."""
        seen, comps = set(), []
        for start in range(self.rank):
            if start in seen:
                continue
            comp, todo = [], [start]
            seen.add(start)
            while todo:
                i = todo.pop()
                comp.append(i)
                for j in range(self.rank):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        todo.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def root_coords(self, root):
        """Coordinates of a root in the basis of simple roots."""
        return self._coords_lookup[tuple(root)]

    @cached_property
    def _coords_lookup(self):
        table = dict(zip(self.positive_roots, self.simple_coords))
        for r, c in zip(self.positive_roots, self.simple_coords):
            table[tuple(-x for x in r)] = tuple(-x for x in c)
        return table


def _combine(coeffs, basis, dim):
    out = [0] * dim
    for c, b in zip(coeffs, basis):
        if c:
            for k in range(dim):
                out[k] += c * b[k]
    return tuple(out)


def _positive_system(simple_roots, simple_coroots, dim):
    """Close the simple (root, coroot) pairs under simple reflections."""
    n = len(simple_roots)
    cart = [[linalg.dot(a, c) for c in simple_coroots] for a in simple_roots]
    start = []
    for i in range(n):
        unit = tuple(int(i == j) for j in range(n))
        start.append((unit, unit))
    seen = set(start)
    todo = deque(start)
    while todo:
        b, c = todo.popleft()
        for j in range(n):
            pb = sum(b[i] * cart[i][j] for i in range(n))  # <beta, alpha_j^vee>
            pc = sum(cart[j][i] * c[i] for i in range(n))  # <alpha_j, beta^vee>
            nb = tuple(x - pb * (k == j) for k, x in enumerate(b))
            nc = tuple(x - pc * (k == j) for k, x in enumerate(c))
            if (nb, nc) not in seen:
                seen.add((nb, nc))
                todo.append((nb, nc))
    pos = [(b, c) for b, c in seen if all(x >= 0 for x in b)]
    pos.sort(key=lambda bc: (sum(bc[0]), tuple(-x for x in bc[0])))
    roots = tuple(_combine(b, simple_roots, dim) for b, _ in pos)
    coroots = tuple(_combine(c, simple_coroots, dim) for _, c in pos)
    heights = tuple(sum(b) for b, _ in pos)
    coords = tuple(b for b, _ in pos)
    return roots, coroots, heights, coords


def _assemble(series, rank, dim, similitude, order, roots, coroots, galois, tag):
    pos, posc, heights, coords = _positive_system(roots, coroots, dim)
    rd = RootDatum(series, rank, dim, similitude, order, tuple(roots), tuple(coroots),
                   tuple(tuple(r) for r in galois), tag, pos, posc, heights, coords)
    check_root_datum(rd)
    return rd


def _unit(dim, i, c=1):
    return tuple(c if k == i else 0 for k in range(dim))


def _from_columns(cols):
    return linalg.transpose(cols)


@lru_cache(maxsize=None)
def build_root_datum(series, rank, similitude=False, galois_order=1):
    """Root datum of a classical group.

    Series ``A`` uses the GL(n+1) lattice, ``B`` SO(2n+1), ``C`` Sp(2n) (GSp(2n)
    with ``similitude``), ``D`` SO(2n).  ``galois_order=2`` selects the
    quasi-split form twisted by the nontrivial diagram automorphism
    (unitary groups for A, non-split orthogonal groups for D).
    """
    series = str(series).upper()
    if series not in SERIES:
        raise ValueError(f"unsupported series {series!r}")
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if series == "D" and rank < 3:
        raise ValueError("series D needs rank >= 3")
    if galois_order not in (1, 2):
        raise ValueError(f"galois_order must be 1 or 2, got {galois_order!r}")
    if similitude and series in ("B", "D"):
        raise ValueError(f"similitude coordinate not supported for series {series}")
    if galois_order == 2 and not ((series == "A" and rank >= 2) or series == "D"):
        raise ValueError(f"no nontrivial diagram automorphism for {series}{rank}")

    off = 1 if similitude else 0
    n = rank
    dim = {"A": n + 1, "B": n, "C": n, "D": n}[series] + off

    def e(i, c=1):  # 1-based standard coordinate
        return _unit(dim, off + i - 1, c)

    roots, coroots = [], []
    for i in range(1, n if series != "A" else n + 1):
        r = tuple(a - b for a, b in zip(e(i), e(i + 1)))
        roots.append(r)
        coroots.append(r)
    if series == "B":
        roots.append(e(n))
        coroots.append(e(n, 2))
    elif series == "C":
        r = e(n, 2)
        if similitude:
            r = tuple(a - b for a, b in zip(r, _unit(dim, 0)))
        roots.append(r)
        coroots.append(e(n))
    elif series == "D":
        r = tuple(a + b for a, b in zip(e(n - 1), e(n)))
        roots.append(r)
        coroots.append(r)

    cols = [_unit(dim, j) for j in range(dim)]
    if galois_order == 2 and series == "A":
        m = n + 1
        for i in range(1, m + 1):
            img = e(m + 1 - i, -1)
            if similitude:
                img = tuple(a + b for a, b in zip(img, _unit(dim, 0)))
            cols[off + i - 1] = img
    elif galois_order == 2 and series == "D":
        cols[n - 1] = e(n, -1)
    galois = _from_columns(cols)

    tag = f"{series}{n}" + ("+sim" if similitude else "") + ("/F2" if galois_order == 2 else "")
    return _assemble(series, n, dim, similitude, galois_order, roots, coroots, galois, tag)


def product_root_datum(rd, copies):
    """``copies`` orthogonal copies of a split datum, F permuting them cyclically."""
    if rd.galois_order != 1:
        raise ValueError("product construction expects a split factor")
    if copies < 1:
        raise ValueError("copies must be positive")
    dim = rd.dim * copies
    roots, coroots = [], []
    for k in range(copies):
        pad = lambda v: (0,) * (k * rd.dim) + tuple(v) + (0,) * ((copies - 1 - k) * rd.dim)
        roots += [pad(r) for r in rd.simple_roots]
        coroots += [pad(c) for c in rd.simple_coroots]
    cols = []
    for j in range(dim):
        k, i = divmod(j, rd.dim)
        cols.append(_unit(dim, ((k + 1) % copies) * rd.dim + i))
    tag = f"{copies}x{rd.tag}"
    return _assemble(rd.series, rd.rank * copies, dim, rd.similitude, copies,
                     roots, coroots, _from_columns(cols), tag)


def check_root_datum(rd):
    """Verify the structural invariants; raises ValueError on failure."""
    cart = rd.cartan
    for i in range(rd.rank):
        if cart[i][i] != 2:
            raise ValueError(f"<alpha_{i}, alpha_{i}^vee> = {cart[i][i]} != 2")
        for j in range(rd.rank):
            if i != j and (cart[i][j] > 0 or (cart[i][j] == 0) != (cart[j][i] == 0)):
                raise ValueError("not a Cartan matrix")
    for r, c in zip(rd.positive_roots, rd.positive_coroots):
        if linalg.dot(r, c) != 2:
            raise ValueError(f"coroot of {r} badly normalized")
    simple = set(rd.simple_roots)
    for r in rd.simple_roots:
        if tuple(rd.galois_char(r)) not in simple:
            raise ValueError("F does not permute the simple roots")
    m = linalg.identity(rd.dim)
    for k in range(1, rd.galois_order + 1):
        m = linalg.matmul(rd.galois, m)
        if (m == linalg.identity(rd.dim)) != (k == rd.galois_order):
            raise ValueError(f"F does not have exact order {rd.galois_order}")
    for r in rd.roots:
        fr = tuple(rd.galois_char(r))
        if fr not in rd.coroot_map:
            raise ValueError("F does not preserve the roots")
        if tuple(rd.galois_cochar(rd.coroot(r))) != rd.coroot(fr):
            raise ValueError("F does not commute with the coroot map")
    if rd.series in SERIES and rd.tag and "x" not in rd.tag:
        n = rd.rank
        expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[rd.series]
        if len(rd.positive_roots) != expected:
            raise ValueError("wrong number of positive roots")


def character(rd, coords):
    chi = vec(coords)
    if len(chi) != rd.dim:
        raise ValueError(f"expected {rd.dim} coordinates, got {len(chi)}")
    return chi


def zero(rd):
    return (Fraction(0),) * rd.dim


def fundamental_weights(rd):
    """f_i with <f_i, alpha_j^vee> = delta_ij, vanishing on central cocharacters."""
    inv = linalg.inverse(rd.cartan)
    out = []
    for i in range(rd.rank):
        w = zero(rd)
        for k in range(rd.rank):
            if inv[i][k]:
                w = add(w, scale(inv[i][k], rd.simple_roots[k]))
        out.append(w)
    return out


def rho(rd):
    total = zero(rd)
    for r in rd.positive_roots:
        total = add(total, r)
    return scale(Fraction(1, 2), total)


def highest_root(rd, component=0):
    """Highest root of one irreducible component (the only one if irreducible)."""
    comp = set(rd.components[component])
    best = None
    for r, c, h in zip(rd.positive_roots, rd.simple_coords, rd.root_heights):
        if all((x == 0) or (i in comp) for i, x in enumerate(c)):
            if best is None or h > best[1]:
                best = (r, h)
    return best[0]


def special_simple_roots(rd):
    """Indices of simple roots with coefficient 1 in the highest root of their component."""
    out = []
    for k, comp in enumerate(rd.components):
        coords = rd.root_coords(highest_root(rd, k))
        out += [i for i in comp if coords[i] == 1]
    return tuple(sorted(out))


def is_minuscule(rd, chi):
    return all(pair(chi, c) in (-1, 0, 1) for c in rd.positive_coroots)
