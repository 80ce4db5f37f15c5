"""Exact integral lattices: Gram arithmetic, duals, short vectors,
discriminant forms, and the code-to-lattice construction.

A lattice of rank n is Z^n with an inner product given by a Gram matrix.
To keep everything integer we store gram2 = 2 * Gram: the lattice is
integral iff every gram2 entry is even, and even iff additionally the
diagonal of gram2 is divisible by 4.  Vectors are coordinate row tuples in
the lattice's own basis; the dual lattice is G^{-1} Z^n in the same
coordinates.  No floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod

from . import budget
from .abelian import quotient_divisors, rational_row_basis
from .intmat import (
    det,
    hnf_basis,
    inverse,
    mat_frac,
    mat_mul,
    snf,
    snf_divisors,
    transpose,
    vec_mat,
)

__all__ = [
    "IntegralLattice",
    "DiscriminantGroup",
    "lattice_from_code",
    "e8_lattice",
    "short_vectors",
    "short_vectors_box",
    "discriminant_group",
    "sublattice_quotient",
    "direct_sum",
]


class IntegralLattice:
    """Rank-n lattice with exact doubled Gram matrix gram2 = 2*Gram."""

    __slots__ = ("rank", "gram2", "ambient_rows", "_gram_inv")

    def __init__(self, gram2, ambient_rows=None):
        gram2 = tuple(tuple(int(x) for x in row) for row in gram2)
        n = len(gram2)
        for row in gram2:
            if len(row) != n:
                raise ValueError("gram2 must be square")
        if gram2 != transpose(gram2):
            raise ValueError("gram2 must be symmetric")
        self.rank = n
        self.gram2 = gram2
        # for lattices built from a code: basis rows in ambient coordinates
        self.ambient_rows = ambient_rows
        self._gram_inv = None

    @classmethod
    def from_gram(cls, gram):
        return cls(tuple(tuple(2 * x for x in row) for row in gram))

    # --- basic predicates -------------------------------------------------
    @property
    def is_integral(self):
        return all(x % 2 == 0 for row in self.gram2 for x in row)

    @property
    def is_even(self):
        return self.is_integral and all(self.gram2[i][i] % 4 == 0 for i in range(self.rank))

    @property
    def is_definite(self):
        # positive definiteness via leading principal minors of gram2
        for k in range(1, self.rank + 1):
            minor = det(tuple(row[:k] for row in self.gram2[:k]))
            if minor <= 0:
                return False
        return True

    # --- arithmetic ---------------------------------------------------------
    def inner(self, u, v):
        """Exact inner product (u, v); Fraction or int."""
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = self.gram2[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        half, rem = divmod(total, 2)
        return half if rem == 0 else Fraction(total, 2)

    def norm(self, v):
        return self.inner(v, v)

    def gram(self):
        return tuple(tuple(Fraction(x, 2) for x in row) for row in self.gram2)

    def determinant(self):
        """det of the Gram matrix (int for integral lattices)."""
        d = Fraction(det(self.gram2), 2**self.rank)
        return int(d) if d.denominator == 1 else d

    def gram_inverse(self):
        if self._gram_inv is None:
            self._gram_inv = inverse(self.gram())
        return self._gram_inv

    def dual_basis_rows(self):
        """Rows spanning the dual lattice in these coordinates (= G^{-1})."""
        return self.gram_inverse()

    def rescale(self, s):
        return IntegralLattice(tuple(tuple(x * s for x in row) for row in self.gram2))

    def in_dual(self, v):
        """True if the rational row v pairs integrally with the lattice."""
        return all(
            sum(Fraction(x) * Fraction(g, 2) for x, g in zip(v, col)).denominator == 1
            for col in zip(*self.gram2)
        )

    def __eq__(self, other):
        return isinstance(other, IntegralLattice) and self.gram2 == other.gram2

    def __hash__(self):
        return hash(self.gram2)

    def __repr__(self):
        return f"IntegralLattice(rank={self.rank}, det={self.determinant()})"


def direct_sum(*lattices):
    """Orthogonal sum; block-diagonal doubled Gram."""
    n = sum(l.rank for l in lattices)
    rows = []
    offset = 0
    for lat in lattices:
        for row in lat.gram2:
            rows.append((0,) * offset + tuple(row) + (0,) * (n - offset - lat.rank))
        offset += lat.rank
    return IntegralLattice(rows)


def lattice_from_code(code):
    """Scaled construction-A lattice of a binary code.

    In ambient coordinates y (the code's coordinates scaled by 1/sqrt(2)),
    the lattice is {y in Z^n : y mod 2 in C} with (u, v) = u.v/2.  The
    returned lattice carries the chosen basis as `ambient_rows` so callers
    can express ambient vectors in basis coordinates.  Even iff the code is
    doubly even.
    """
    n = code.length
    gen_rows = [tuple((w >> i) & 1 for i in range(n)) for w in code.rows]
    stacked = gen_rows + [tuple(2 * int(i == j) for j in range(n)) for i in range(n)]
    basis = hnf_basis(stacked)
    gram2 = mat_mul(basis, transpose(basis))
    return IntegralLattice(gram2, ambient_rows=basis)


def ambient_to_basis(lattice, y):
    """Coordinates of an ambient row y in the lattice basis (must be exact)."""
    if lattice.ambient_rows is None:
        raise ValueError("lattice carries no ambient basis")
    x = vec_mat(tuple(Fraction(v) for v in y), inverse(mat_frac(lattice.ambient_rows)))
    if any(c.denominator != 1 for c in x):
        raise ValueError("vector is not in the lattice")
    return tuple(int(c) for c in x)


@lru_cache(maxsize=None)
def e8_lattice():
    """The E8 root lattice, realized from the [8,4,4] Hamming code."""
    from .f2codes import hamming_code

    return lattice_from_code(hamming_code(8))


def _floor_sqrt_frac(fr):
    """floor(sqrt(p/q)) for a nonnegative Fraction."""
    if fr < 0:
        raise ValueError("negative radicand")
    p, q = fr.numerator, fr.denominator
    return isqrt(p * q) // q


def _ldl(gram):
    """Exact LDL^T of a positive definite Fraction matrix.

    Returns (diag, lower) with gram = L D L^T, L unit lower triangular.
    """
    n = len(gram)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = gram[i][j] - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            if i == j:
                if s <= 0:
                    raise ValueError("matrix is not positive definite")
                diag[i] = s
                lower[i][i] = Fraction(1)
            else:
                lower[i][j] = s / diag[j]
    return diag, lower


def short_vectors(lattice, norm, deadline=None):
    """All v with (v, v) == norm, exactly; closed under negation.

    Fincke-Pohst style recursion on an exact LDL^T decomposition; all
    bounds are derived with integer square roots, so the enumeration is
    exact.  Requires a positive definite lattice.
    """
    norm = Fraction(norm)
    if norm <= 0:
        raise ValueError("norm must be positive")
    if not lattice.is_definite:
        raise ValueError("short vector enumeration needs a definite lattice")
    n = lattice.rank
    diag, lower = _ldl(lattice.gram())
    # For v = (x_1..x_n): (v,v) = sum_i diag[i] * (x_i + sum_{j>i} L_ji x_j)^2
    out = []
    coords = [0] * n
    nodes = 0

    def rec(i, remaining):
        nonlocal nodes
        nodes += 1
        if nodes % 4096 == 0:
            budget.check(deadline)
        if i < 0:
            if remaining == 0:
                v = tuple(coords)
                if any(v):
                    out.append(v)
            return
        center = -sum(lower[j][i] * coords[j] for j in range(i + 1, n))
        bound = remaining / diag[i]
        r = _floor_sqrt_frac(bound)
        hi = int(center) + r + 2
        while Fraction(hi) - center > 0 and (Fraction(hi) - center) ** 2 > bound:
            hi -= 1
        lo = int(center) - r - 2
        while center - Fraction(lo) > 0 and (center - Fraction(lo)) ** 2 > bound:
            lo += 1
        for x in range(lo, hi + 1):
            coords[i] = x
            used = diag[i] * (Fraction(x) - center) ** 2
            if used <= remaining:
                rec(i - 1, remaining - used)
        coords[i] = 0

    rec(n - 1, norm)
    # exactness: only keep exact-norm hits (rec already enforces remaining == 0)
    return out


def short_vectors_box(lattice, norm):
    """Naive box-bound enumeration oracle (use only for small ranks).

    Coordinate bounds come from x_i^2 <= norm * (G^{-1})_ii, which holds
    for every v with (v,v) <= norm.
    """
    norm = Fraction(norm)
    if not lattice.is_definite:
        raise ValueError("needs a definite lattice")
    n = lattice.rank
    ginv = lattice.gram_inverse()
    bounds = [_floor_sqrt_frac(norm * ginv[i][i]) for i in range(n)]
    out = []

    def rec(i, v):
        if i == n:
            if any(v) and lattice.norm(v) == norm:
                out.append(tuple(v))
            return
        for x in range(-bounds[i], bounds[i] + 1):
            rec(i + 1, v + [x])

    rec(0, [])
    return out


@dataclass(frozen=True)
class DiscriminantGroup:
    """L*/L with its torsion quadratic and bilinear forms.

    generators are rational rows (dual-lattice coordinates in the lattice
    basis); orders are the matching elementary divisors (> 1).  q is the
    norm mod 2 (even lattices), b the inner product mod 1.
    """

    lattice: IntegralLattice
    generators: tuple
    orders: tuple

    @property
    def order(self):
        return prod(self.orders) if self.orders else 1

    @property
    def exponent(self):
        return self.orders[-1] if self.orders else 1

    def q(self, v):
        return Fraction(self.lattice.norm(v)) % 2

    def b(self, u, v):
        return Fraction(self.lattice.inner(u, v)) % 1

    def element(self, coeffs):
        """Sum of coeffs[i] * generators[i] as a rational row."""
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(coeffs, self.generators):
            for i in range(n):
                out[i] += c * g[i]
        return tuple(out)

    def p_primary_generators(self):
        """dict p -> list of (generator row, p-power order), largest first."""
        out = {}
        for g, d in zip(self.generators, self.orders):
            left = d
            p = 2
            while left > 1:
                if left % p == 0:
                    a = 0
                    while left % p == 0:
                        left //= p
                        a += 1
                    comp = tuple(x * (d // p**a) for x in g)
                    out.setdefault(p, []).append((comp, p**a))
                p += 1 if p == 2 else 2
        for comps in out.values():
            comps.sort(key=lambda t: -t[1])
        return out


def discriminant_group(lattice):
    """Smith-form presentation of L*/L for an integral lattice."""
    if not lattice.is_integral:
        raise ValueError("discriminant group needs an integral lattice")
    gram = tuple(tuple(x // 2 for x in row) for row in lattice.gram2)
    n = lattice.rank
    d, u, _ = snf(gram)
    # U G V = D, so L* = Z^n G^{-1} = Z^n D^{-1} U: generators are rows of
    # U scaled by 1/d_i, of order exactly d_i (unimodular rows have gcd 1).
    gens = []
    orders = []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            gens.append(tuple(Fraction(x, di) for x in u[i]))
            orders.append(di)
    return DiscriminantGroup(lattice, tuple(gens), tuple(orders))


def sublattice_quotient(lattice, sub_rows):
    """Elementary divisors (> 1) of L / span(sub_rows)."""
    n = lattice.rank
    basis = rational_row_basis(sub_rows)
    if len(basis) != n:
        raise ValueError("sublattice must have full rank")
    sup = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return quotient_divisors(sup, basis)
