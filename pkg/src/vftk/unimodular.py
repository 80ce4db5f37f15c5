"""Even unimodular overlattices built from isotropic glue.

Three constructions on an even lattice L: a definite-preserving
unimodular overlattice of 4 or 8 orthogonal copies of L, an indefinite
unimodular overlattice of rank at most 2*rank(L) + 2, and an overlattice
of L with its s-rescaling whose determinant is the prime power s^rank.
All glue coefficients come from exact sum-of-squares congruences, every
isotropy check is exact rational arithmetic, and isometries of L extend
to the overlattices by acting diagonally on the copies.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .abelian import rational_row_basis
from .intmat import det, inverse, mat_mul, transpose
from .lattices import (
    DiscriminantGroup,
    IntegralLattice,
    direct_sum,
    discriminant_group,
    short_vectors,
)

__all__ = [
    "IsotropicSubgroup",
    "Overlattice",
    "ExtensionVerdict",
    "sum_two_squares_mod",
    "sum_four_squares_mod",
    "isotropic_subgroup",
    "overlattice_from_isotropic",
    "first_block_primitive",
    "unimodularize",
    "hyperbolic_unimodularize",
    "prime_power_twist",
    "dirichlet_prime",
    "strong_extension_check",
    "definite_automorphisms",
]


def _is_prime(m):
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def sum_two_squares_mod(p, r):
    """(a, b) with a^2 + b^2 == -1 mod p^r, for an odd prime p.

    A solution mod p always exists because {a^2} and {-1 - b^2} each take
    (p+1)/2 values.  It lifts one power at a time: if a^2 + b^2 + 1 is
    m * p^j, adding (x*p^j, y*p^j) changes the sum by 2(ax + by)p^j mod
    p^{j+1}, so it suffices to solve 2(ax + by) == -m mod p.
    """
    if p == 2 or not _is_prime(p):
        raise ValueError("p must be an odd prime")
    if r < 1:
        raise ValueError("r must be positive")
    a = b = None
    for a0 in range(p):
        rest = (-1 - a0 * a0) % p
        b0 = next((t for t in range(p) if t * t % p == rest), None)
        if b0 is not None:
            a, b = a0, b0
            break
    for j in range(1, r):
        pj = p**j
        m = ((a * a + b * b + 1) // pj) % p
        if a % p:
            a += (-m * pow(2 * a, -1, p)) % p * pj
        else:
            b += (-m * pow(2 * b, -1, p)) % p * pj
    a, b = a % p**r, b % p**r
    assert (a * a + b * b + 1) % p**r == 0
    return a, b


def sum_four_squares_mod(r):
    """(a, b, c, d) with a^2 + b^2 + c^2 + d^2 == -1 mod 2^r.

    Decomposes 2^r - 1 into four squares exactly (always possible), so
    the congruence holds on the nose; components come out decreasing.
    """
    if r < 1:
        raise ValueError("r must be positive")
    n = (1 << r) - 1
    for a in range(isqrt(n), -1, -1):
        n_a = n - a * a
        for b in range(min(a, isqrt(n_a)), -1, -1):
            n_b = n_a - b * b
            for c in range(min(b, isqrt(n_b)), -1, -1):
                d2 = n_b - c * c
                d = isqrt(d2)
                if d <= c and d * d == d2:
                    return a, b, c, d
    raise AssertionError("unreachable: every natural number is a sum of four squares")


def _reduced(row):
    return tuple(Fraction(x) % 1 for x in row)


@dataclass(frozen=True)
class IsotropicSubgroup:
    """Subgroup of a discriminant group on which q vanishes identically.

    generators are rational rows in the ambient lattice's coordinates.
    q == 0 mod 2 on each generator and b == 0 mod 1 on each pair force
    q == 0 on the whole subgroup.
    """

    ambient: DiscriminantGroup
    generators: tuple

    def closure(self):
        """All subgroup elements as rows with coordinates reduced mod 1."""
        zero = tuple(Fraction(0) for _ in range(self.ambient.lattice.rank))
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for u in frontier:
                for g in self.generators:
                    w = _reduced(tuple(x + y for x, y in zip(u, g)))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen

    def order(self):
        return len(self.closure())


def isotropic_subgroup(dg, generators):
    """Validated isotropic subgroup of the discriminant group dg.

    Exact checks: every generator lies in the dual lattice, has q == 0
    mod 2, and pairs to 0 mod 1 with every other generator.
    """
    gens = tuple(tuple(Fraction(x) for x in g) for g in generators)
    lat = dg.lattice
    for g in gens:
        if len(g) != lat.rank or not lat.in_dual(g):
            raise ValueError("glue generator does not lie in the dual lattice")
        if dg.q(g) != 0:
            raise ValueError("glue generator is not isotropic")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if dg.b(gens[i], gens[j]) != 0:
                raise ValueError("glue generators are not orthogonal")
    return IsotropicSubgroup(dg, gens)


@dataclass(frozen=True)
class Overlattice:
    """Even overlattice base <= result <= base* given by isotropic glue.

    basis_rows expresses the result's basis in base coordinates (exact
    rationals).  diagonal_copies and tail_rank record the block shape the
    glue was built over: isometries of the block lattice act on the first
    diagonal_copies blocks and fix the tail (see strong_extension_check).
    """

    base: IntegralLattice
    glue: IsotropicSubgroup
    result: IntegralLattice
    basis_rows: tuple
    diagonal_copies: int = 1
    tail_rank: int = 0


def _index_of_basis(basis):
    """[result : base] = 1/|det(basis_rows)| for a full-rank rational basis."""
    den = lcm(*[x.denominator for row in basis for x in row])
    di = det(tuple(tuple(int(x * den) for x in row) for row in basis))
    idx = Fraction(den ** len(basis), abs(di))
    assert idx.denominator == 1
    return int(idx)


def overlattice_from_isotropic(base, glue, diagonal_copies=1, tail_rank=0):
    """Even overlattice of base generated by the glue's coset representatives."""
    n = base.rank
    eye = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    basis = rational_row_basis(eye + list(glue.generators))
    gram2 = []
    for u in basis:
        row = []
        for v in basis:
            x = 2 * Fraction(base.inner(u, v))
            assert x.denominator == 1, "validated glue always yields an integral overlattice"
            row.append(int(x))
        gram2.append(tuple(row))
    result = IntegralLattice(gram2)
    index = _index_of_basis(basis)
    assert result.determinant() * index**2 == base.determinant()
    assert not base.is_even or result.is_even
    return Overlattice(base, glue, result, basis, diagonal_copies, tail_rank)


def first_block_primitive(over, block_rank):
    """True if the first block_rank coordinates meet the result in the base.

    Equivalent criterion: the projection of the glue away from the first
    block is injective, i.e. no nonzero glue element is supported on the
    first block alone.
    """
    for row in over.glue.closure():
        if not any(row[block_rank:]) and any(row[:block_rank]):
            return False
    return True


def _p_exponent(p, order):
    e = 0
    while order > 1:
        order //= p
        e += 1
    return e


def unimodularize(l, definite=None):
    """Even unimodular overlattice of 4 or 8 orthogonal copies of l.

    4 copies when det(l) is odd, 8 when even.  For each prime p dividing
    the determinant, every p-primary generator x of the discriminant
    group is spread across the copies with sum-of-squares coefficients:
    (rx, sx, 0, x) and (sx, -rx, x, 0) with r^2 + s^2 == -1 mod p^a for
    odd p (repeated on both halves in the 8-copy case), and four-square
    analogues mod 2^{a+1} spanning all eight copies for p = 2.  The glue
    group has order det^2 (resp. det^4), killing the determinant exactly.

    definite=None verifies positive definiteness of the result exactly
    when l is positive definite; pass True/False to force or skip that.
    """
    if not l.is_even:
        raise ValueError("input lattice must be even")
    d = abs(l.determinant())
    copies = 4 if d % 2 else 8
    base = direct_sum(*[l] * copies)
    big = discriminant_group(base)
    gens = []
    for p, comps in sorted(discriminant_group(l).p_primary_generators().items()):
        a1 = _p_exponent(p, comps[0][1])  # orders come largest-first
        if p == 2:
            r, s, t, u = sum_four_squares_mod(a1 + 1)
            pats = [
                (r, s, t, u, 1, 0, 0, 0),
                (s, -r, u, -t, 0, 1, 0, 0),
                (-1, 0, 0, 0, r, s, t, u),
                (0, -1, 0, 0, s, -r, u, -t),
            ]
        else:
            r, s = sum_two_squares_mod(p, a1)
            pats = [(r, s, 0, 1), (s, -r, 1, 0)]
            if copies == 8:
                pats = [q + (0,) * 4 for q in pats] + [(0,) * 4 + q for q in pats]
        for x, _ in comps:
            for pat in pats:
                row = []
                for c in pat:
                    row.extend(c * xi for xi in x)
                gens.append(tuple(row))
    glue = isotropic_subgroup(big, gens)
    over = overlattice_from_isotropic(base, glue, diagonal_copies=copies)
    assert abs(over.result.determinant()) == 1
    assert first_block_primitive(over, l.rank)
    if definite is None:
        definite = l.is_definite
    if definite:
        assert over.result.is_definite
    return over


def hyperbolic_unimodularize(l):
    """Indefinite even unimodular overlattice of rank <= 2*rank(l) + 2.

    For |det| = 1 this is l plus one hyperbolic plane.  Otherwise l and
    its sign-flip are glued along the diagonal of their discriminant
    groups, with a hyperbolic plane added to force indefiniteness.
    Purely algebraic: no short-vector enumeration is involved.
    """
    if not l.is_even:
        raise ValueError("input lattice must be even")
    plane = IntegralLattice.from_gram(((0, 1), (1, 0)))
    if l.rank == 0 or abs(l.determinant()) == 1:
        base = direct_sum(l, plane)
        glue = isotropic_subgroup(discriminant_group(base), ())
        over = overlattice_from_isotropic(base, glue, diagonal_copies=1, tail_rank=2)
    else:
        base = direct_sum(l, l.rescale(-1), plane)
        pad = (Fraction(0), Fraction(0))
        gens = [g + g + pad for g in discriminant_group(l).generators]
        glue = isotropic_subgroup(discriminant_group(base), gens)
        over = overlattice_from_isotropic(base, glue, diagonal_copies=2, tail_rank=2)
        assert first_block_primitive(over, l.rank)
    res = over.result
    assert abs(res.determinant()) == 1 and res.is_even
    assert not res.is_definite and not res.rescale(-1).is_definite
    return over


def prime_power_twist(l, s):
    """Overlattice of l + l(s) with determinant s^rank(l).

    Requires s prime with s == -1 mod 2*det(l); the glue is the diagonal
    {(x, x)} of the two discriminant groups.  Definiteness is preserved,
    l embeds primitively, and isometries of l extend diagonally.
    """
    if not l.is_even:
        raise ValueError("input lattice must be even")
    if not _is_prime(s):
        raise ValueError("s must be prime")
    d = abs(l.determinant())
    if (s + 1) % (2 * d):
        raise ValueError("s must be -1 mod 2*det(l)")
    base = direct_sum(l, l.rescale(s))
    gens = [g + g for g in discriminant_group(l).generators]
    glue = isotropic_subgroup(discriminant_group(base), gens)
    over = overlattice_from_isotropic(base, glue, diagonal_copies=2)
    assert over.result.determinant() == s**l.rank
    assert first_block_primitive(over, l.rank)
    if l.is_definite:
        assert over.result.is_definite
    return over


def dirichlet_prime(l, lower):
    """Smallest prime >= lower that is -1 mod 2*det(l)."""
    m = 2 * abs(l.determinant())
    s = max(2, lower)
    while (s + 1) % m or not _is_prime(s):
        s += 1
    return s


def _is_isometry(lattice, w):
    return mat_mul(mat_mul(w, lattice.gram2), transpose(w)) == lattice.gram2


def _block_diagonal(w, copies, tail_rank):
    n = len(w)
    total = copies * n + tail_rank
    rows = []
    for c in range(copies):
        for r in range(n):
            row = [0] * total
            row[c * n : (c + 1) * n] = list(w[r])
            rows.append(tuple(row))
    for t in range(tail_rank):
        row = [0] * total
        row[copies * n + t] = 1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ExtensionVerdict:
    extends: bool
    matrix: tuple


def strong_extension_check(l, over, gens):
    """Extend isometries of l across the overlattice, copy-diagonally.

    For each generator w the candidate map is w on each of the
    overlattice's diagonal blocks and the identity on the tail.  It
    descends to the overlattice iff its matrix in the result basis is
    integral -- equivalently, iff the induced map on the discriminant
    group fixes the glue setwise.  Returns one verdict per generator,
    with the extended matrix (rows = basis images) when it exists.
    """
    if over.diagonal_copies * l.rank + over.tail_rank != over.base.rank:
        raise ValueError("overlattice block structure does not match l")
    b = tuple(tuple(Fraction(x) for x in row) for row in over.basis_rows)
    b_inv = inverse(b)
    verdicts = []
    for w in gens:
        w = tuple(tuple(int(x) for x in row) for row in w)
        if len(w) != l.rank or not _is_isometry(l, w):
            raise ValueError("generator is not an isometry of l")
        amb = _block_diagonal(w, over.diagonal_copies, over.tail_rank)
        x = mat_mul(mat_mul(b, amb), b_inv)
        if all(v.denominator == 1 for row in x for v in row):
            mat = tuple(tuple(int(v) for v in row) for row in x)
            assert _is_isometry(over.result, mat)
            verdicts.append(ExtensionVerdict(True, mat))
        else:
            verdicts.append(ExtensionVerdict(False, None))
    return tuple(verdicts)


def definite_automorphisms(l):
    """All isometries of a small positive definite lattice.

    Backtracks over images of the basis vectors among vectors of equal
    norm, pruning on inner products with images already chosen.  Cost
    grows with the short-vector counts, so keep the rank small.
    """
    if not l.is_definite:
        raise ValueError("needs a positive definite lattice")
    n = l.rank
    norms = [Fraction(l.gram2[i][i], 2) for i in range(n)]
    candidates = {nv: short_vectors(l, nv) for nv in set(norms)}
    out = []
    img = []

    def rec(i):
        if i == n:
            out.append(tuple(img))
            return
        for v in candidates[norms[i]]:
            if all(2 * l.inner(v, img[j]) == l.gram2[i][j] for j in range(i)):
                img.append(v)
                rec(i + 1)
                img.pop()

    rec(0)
    return tuple(out)
