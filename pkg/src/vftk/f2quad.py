"""Quadratic spaces of maximal Witt index over GF(2).

The ambient space is F2^(2n) split into two distinguished totally
singular halves -- the left half (bits 0..n-1) and the right half (bits
n..2n-1) -- with Q(v) = popcount(left & right) mod 2, a sum of n
hyperbolic planes.  The objects classified here are the odd Lagrangians:
n-dimensional subspaces that are totally isotropic for the bilinear
pairing but on which Q restricts to a nonzero linear functional, so the
singular vectors form a hyperplane.  The stabilizer of the left half
acts with exactly n orbits, separated by the left overlap (the dimension
of the intersection with the left half).  In the rank-8 frame
classification the orbit of left overlap j corresponds to the frame
class whose glue code has rank 5 - j.

Vectors are bit-packed ints and subspaces are canonical RREF row tuples,
as in the bits module.
"""

import random
from dataclasses import dataclass
from math import prod

from .bits import (
    f2_echelon,
    f2_identity,
    f2_kernel,
    f2_mat_inverse,
    f2_mat_mul,
    f2_rank,
    f2_reduce,
    f2_rref,
    f2_span,
    f2_transpose,
    f2_vec_mat,
)
from .frames import gl2_order

__all__ = [
    "QuadSpace",
    "OrbitWitness",
    "OrbitClass",
    "StabilizerInfo",
    "hyperbolic_space",
    "quad_value",
    "pairing",
    "nonsingular_vectors",
    "odd_lagrangian_through",
    "is_odd_lagrangian",
    "left_overlap",
    "standard_odd_lagrangian",
    "enumerate_odd_lagrangians",
    "sample_odd_lagrangians",
    "left_stabilizer_order",
    "left_stabilizer_generators",
    "transform_member",
    "is_isometry",
    "fixes_left_half",
    "random_isometry",
    "orbit_partition",
    "same_orbit_witness",
    "stabilizer_structure",
    "orbit_census",
    "orbit_size",
    "total_odd_count",
    "gaussian_binomial",
]


def quad_value(n, v):
    """Q(v) for the split form: left half dotted with right half."""
    return ((v & ((1 << n) - 1)) & (v >> n)).bit_count() & 1


def pairing(n, u, v):
    """Bilinear pairing Q(u+v) + Q(u) + Q(v)."""
    mask = (1 << n) - 1
    return (((u & mask) & (v >> n)).bit_count() + ((v & mask) & (u >> n)).bit_count()) & 1


def _swap_halves(n, v):
    return (v >> n) | ((v & ((1 << n) - 1)) << n)


def nonsingular_vectors(n):
    return [v for v in range(1, 1 << (2 * n)) if quad_value(n, v)]


@dataclass(frozen=True)
class QuadSpace:
    """Dimension-2n hyperbolic quadratic space with its marked halves."""

    n: int

    @property
    def dim(self):
        return 2 * self.n

    def quad(self, v):
        return quad_value(self.n, v)

    def pairing(self, u, v):
        return pairing(self.n, u, v)

    def nonsingular_vectors(self):
        return nonsingular_vectors(self.n)


def hyperbolic_space(n):
    if n < 1:
        raise ValueError("n must be positive")
    return QuadSpace(n)


# --- members ---------------------------------------------------------------


def _canonical(rows):
    return tuple(f2_rref(rows))


def is_odd_lagrangian(n, member):
    """Totally isotropic of dimension n with Q nonzero (hence linear) on it."""
    rows = tuple(member)
    if len(rows) != n or f2_rank(rows) != n:
        return False
    if any(pairing(n, rows[i], rows[l]) for i in range(n) for l in range(i + 1, n)):
        return False
    return any(quad_value(n, r) for r in rows)


def odd_lagrangian_through(n, v):
    """The member spanned by a nonsingular v and the left vectors orthogonal to v.

    Its left overlap is n - 1, the maximal value.
    """
    if not quad_value(n, v):
        raise ValueError("v must be nonsingular")
    # left vectors orthogonal to v: kernel of the right half of v as a functional
    perp = f2_kernel(f2_transpose([v >> n], n), n)
    member = _canonical(list(perp) + [v])
    assert is_odd_lagrangian(n, member)
    return member


def left_overlap(n, member):
    """dim of the intersection with the left half (the orbit invariant)."""
    return n - f2_rank([r >> n for r in member])


def standard_odd_lagrangian(n, overlap):
    """Canonical orbit representative: span{e0+f0, f1..f_{m-1}, e_m..e_{n-1}}."""
    if not 0 <= overlap <= n - 1:
        raise ValueError("overlap must lie in 0..n-1")
    m = n - overlap
    rows = [1 | (1 << n)]
    rows += [1 << (n + i) for i in range(1, m)]
    rows += [1 << i for i in range(m, n)]
    return _canonical(rows)


def enumerate_odd_lagrangians(n):
    """Every odd Lagrangian, exhaustively (cost ~ number of Lagrangians).

    Enumerates RREF bases of totally isotropic n-subspaces directly:
    pivots descend, earlier rows are required to vanish at later pivots,
    and each new row is solved for inside the perp of the chosen rows.
    """
    if not 1 <= n <= 5:
        raise ValueError("exhaustive enumeration is limited to 1 <= n <= 5")
    out = []
    rows = []

    def rec(max_pivot):
        need = n - len(rows)
        if need == 0:
            if any(quad_value(n, r) for r in rows):
                out.append(tuple(rows))
            return
        for p in range(max_pivot, need - 2, -1):
            if any((r >> p) & 1 for r in rows):
                continue  # keep full RREF: old rows must vanish at the new pivot
            low = (1 << p) - 1
            eqs = [(_swap_halves(n, r) & low, (_swap_halves(n, r) >> p) & 1) for r in rows]
            w0 = _solve_parity(eqs)
            if w0 is None:
                continue
            kern = f2_kernel(f2_transpose([m for m, _ in eqs], p), p)
            for combo in f2_span(kern):
                rows.append((1 << p) | (w0 ^ combo))
                rec(p - 1)
                rows.pop()

    rec(2 * n - 1)
    return tuple(sorted(out))


def sample_odd_lagrangians(n, count=32, seed=0):
    """Constructive members: one through a random nonsingular vector, then
    pushed around by a random isometry of the whole space."""
    rng = random.Random(seed)
    vecs = nonsingular_vectors(n)
    out = []
    for _ in range(count):
        member = odd_lagrangian_through(n, rng.choice(vecs))
        out.append(transform_member(n, random_isometry(n, rng), member))
    return tuple(out)


def _solve_parity(eqs):
    """One w with popcount(w & mask) % 2 == rhs for every (mask, rhs); None if none."""
    rows = []
    for mask, rhs in eqs:
        for bm, br in rows:
            if mask ^ bm < mask:
                mask ^= bm
                rhs ^= br
        if mask:
            rows.append((mask, rhs))
            rows.sort(key=lambda t: -t[0])
        elif rhs:
            return None
    w = 0
    # ascending leading bits: each adjustment bit is absent from earlier masks
    for mask, rhs in sorted(rows, key=lambda t: t[0]):
        if ((w & mask).bit_count() & 1) != rhs:
            w ^= 1 << (mask.bit_length() - 1)
    return w


# --- the stabilizer of the left half ----------------------------------------


def left_stabilizer_order(n):
    """2^{n(n-1)/2} * |GL(n,2)|: unipotent radical times a GL Levi factor."""
    return 2 ** (n * (n - 1) // 2) * gl2_order(n)


def left_stabilizer_generators(n):
    """Generators (rows = images of basis vectors) of the left-half stabilizer.

    GL pairs act as B on the right half and B^{-T} on the left; the
    unipotent part adds symmetric zero-diagonal left corrections to the
    right-half images.
    """
    gens = []
    for i in range(n):
        for l in range(n):
            if i == l:
                continue
            g = list(f2_identity(2 * n))
            g[n + i] ^= 1 << (n + l)  # f_i -> f_i + f_l
            g[l] ^= 1 << i  # e_l -> e_l + e_i
            gens.append(tuple(g))
    for i in range(n):
        for l in range(i + 1, n):
            g = list(f2_identity(2 * n))
            g[n + i] ^= 1 << l  # f_i -> f_i + e_l
            g[n + l] ^= 1 << i  # f_l -> f_l + e_i
            gens.append(tuple(g))
    return gens


def is_isometry(n, g):
    basis = f2_identity(2 * n)
    if any(quad_value(n, g[i]) != quad_value(n, basis[i]) for i in range(2 * n)):
        return False
    return all(
        pairing(n, g[i], g[l]) == pairing(n, basis[i], basis[l])
        for i in range(2 * n)
        for l in range(i + 1, 2 * n)
    )


def fixes_left_half(n, g):
    return all(g[i] < (1 << n) for i in range(n))


def transform_member(n, g, member):
    return _canonical([f2_vec_mat(r, g) for r in member])


def random_isometry(n, rng, length=None):
    """Product of transvections x -> x + (x,u)u at random nonsingular u."""
    vecs = nonsingular_vectors(n)
    g = tuple(f2_identity(2 * n))
    for _ in range(3 * n if length is None else length):
        u = rng.choice(vecs)
        t = tuple(b ^ (u if pairing(n, b, u) else 0) for b in f2_identity(2 * n))
        g = tuple(f2_mat_mul(g, t))
    return g


def orbit_partition(n, members):
    """Orbits of the left-half stabilizer on the given members (BFS)."""
    gens = left_stabilizer_generators(n)
    todo = set(members)
    orbits = []
    while todo:
        seed_member = todo.pop()
        orbit = {seed_member}
        frontier = [seed_member]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    image = transform_member(n, g, m)
                    if image not in orbit:
                        orbit.add(image)
                        nxt.append(image)
            frontier = nxt
        todo -= orbit
        orbits.append(frozenset(orbit))
    return orbits


# --- canonical witnesses -----------------------------------------------------


def _adapted_frame(n, member):
    """Basis of the whole space adapted to the member.

    Returns rows [w_1..w_m, t_1..t_j, s_1..s_m, p_1..p_j] where the t's
    span the left overlap, the w's complete the member with Q(w_1) = 1 and
    Q(w_i) = 0 otherwise, the s's lie in the left half dual to the w's,
    and the p's complete the t's to hyperbolic pairs.  The Gram/Q data of
    this list depends only on (n, overlap), which is what makes the
    canonicalizing isometry exist.
    """
    t_rows = [r for r in member if r < (1 << n)]
    u_rows = [r for r in member if r >> n]
    j = len(t_rows)
    m = n - j
    qs = [quad_value(n, r) for r in u_rows]
    if 1 not in qs:
        raise ValueError("member is singular (not an odd Lagrangian)")
    w1 = u_rows[qs.index(1)]
    ws = [w1] + [u ^ (w1 if q else 0) for u, q in zip(u_rows, qs) if u != w1]
    # left vectors pairing as delta against the w's: columns of the inverse
    # of a completion of the right parts
    high = [w >> n for w in ws]
    pivots = {r.bit_length() - 1 for r in f2_echelon(high)}
    full = list(high) + [1 << pos for pos in range(n) if pos not in pivots]
    finv = f2_mat_inverse(full, n)
    ss = [sum(((finv[row] >> i) & 1) << row for row in range(n)) for i in range(m)]
    # hyperbolic partners of the t's: orthogonal to everything else
    ps = []
    for l, t in enumerate(t_rows):
        eqs = [(_swap_halves(n, t2), int(l2 == l)) for l2, t2 in enumerate(t_rows)]
        eqs += [(_swap_halves(n, w), 0) for w in ws]
        eqs += [(_swap_halves(n, s), 0) for s in ss]
        p = _solve_parity(eqs)
        assert p is not None, "hyperbolic completion always exists"
        if quad_value(n, p):
            p ^= t
        ps.append(p)
    for l in range(j):
        for l2 in range(l + 1, j):
            if pairing(n, ps[l], ps[l2]):
                ps[l2] ^= t_rows[l]
    return ws + t_rows + ss + ps


def _canonicalizer(n, member):
    """g in the left-half stabilizer taking member to its standard form."""
    j = left_overlap(n, member)
    m = n - j
    source = _adapted_frame(n, member)
    target = [1 | (1 << n)]
    target += [1 << (n + i) for i in range(1, m)]  # images of w_2..w_m
    target += [1 << (m + l) for l in range(j)]  # images of the t's
    target += [1 << i for i in range(m)]  # images of the s's
    target += [1 << (n + m + l) for l in range(j)]  # images of the p's
    return tuple(f2_mat_mul(f2_mat_inverse(source, 2 * n), target))


@dataclass(frozen=True)
class OrbitWitness:
    """Either an explicit witness isometry or an invariant refutation."""

    matrix: tuple
    overlaps: tuple

    @property
    def same_orbit(self):
        return self.matrix is not None


def same_orbit_witness(n, a, b):
    """Witness in the left-half stabilizer mapping a to b, or a refutation.

    Members with equal left overlap are canonicalized to the same standard
    form; the witness is canonicalizer(a) * canonicalizer(b)^{-1}.  The
    returned matrix is verified: it preserves Q, fixes the left half, and
    maps a onto b.  Unequal overlaps are returned as the refutation.
    """
    a = _canonical(a)
    b = _canonical(b)
    ja, jb = left_overlap(n, a), left_overlap(n, b)
    if ja != jb:
        return OrbitWitness(None, (ja, jb))
    g = tuple(f2_mat_mul(_canonicalizer(n, a), f2_mat_inverse(_canonicalizer(n, b), 2 * n)))
    assert is_isometry(n, g) and fixes_left_half(n, g)
    assert transform_member(n, g, a) == b
    return OrbitWitness(g, (ja, jb))


# --- orbit census and stabilizer structure -----------------------------------


def gaussian_binomial(m, k):
    """Number of k-dimensional subspaces of F2^m."""
    if not 0 <= k <= m:
        return 0
    num = prod(2**m - 2**i for i in range(k))
    den = prod(2**k - 2**i for i in range(k))
    return num // den


def orbit_size(n, j):
    """Closed-form orbit size for left overlap j.

    A member with overlap j is exactly a pair (R, S): an (n-j)-dim
    projection R to the right half (the left part is forced to be the
    annihilator of R) and, in a basis of R, a symmetric (n-j) x (n-j)
    matrix S over F2 whose diagonal -- the Q values -- is nonzero.
    """
    m = n - j
    return gaussian_binomial(n, m) * 2 ** (m * (m - 1) // 2) * (2**m - 1)


def total_odd_count(n):
    return sum(orbit_size(n, j) for j in range(n))


@dataclass(frozen=True)
class StabilizerInfo:
    overlap: int
    order: int
    unipotent_order: int
    levi: str


@dataclass(frozen=True)
class OrbitClass:
    overlap: int
    size: int
    stabilizer_order: int
    unipotent_order: int
    levi: str


def _full_left_stabilizer(n):
    """Every element of the left-half stabilizer (feasible for n <= 3)."""
    from itertools import product as iproduct

    unipotent_masks = []
    pairs = [(i, l) for i in range(n) for l in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        mat = [0] * n
        for idx, (i, l) in enumerate(pairs):
            if (bits >> idx) & 1:
                mat[i] |= 1 << l
                mat[l] |= 1 << i
        unipotent_masks.append(mat)
    out = []
    for b in iproduct(range(1, 1 << n), repeat=n):
        if f2_rank(b) != n:
            continue
        binv_t = f2_transpose(f2_mat_inverse(list(b), n), n)
        for mat in unipotent_masks:
            # unipotent first, then the GL pair: the raw left correction
            # to the f-block is M * B^{-T}, not M itself
            corr = f2_mat_mul(mat, binv_t)
            g = [binv_t[i] for i in range(n)]
            g += [(b[i] << n) ^ corr[i] for i in range(n)]
            out.append(tuple(g))
    assert len(set(out)) == left_stabilizer_order(n)
    return out


def stabilizer_structure(n, member):
    """(order, unipotent order, Levi description) of the member's stabilizer.

    For n <= 3 the stabilizer is filtered out of the full left-half
    stabilizer and its unipotent part is the kernel of the action on the
    graded pieces of the fixed flag (the left overlap and the singular
    hyperplane modulo it); the Levi factorization is verified exactly.
    For larger n the orders come from orbit counting, with the unipotent
    order read off the same factorization.
    """
    member = _canonical(member)
    if not is_odd_lagrangian(n, member):
        raise ValueError("not an odd Lagrangian")
    j = left_overlap(n, member)
    levi_order = gl2_order(j) * gl2_order(n - 1 - j)
    levi = f"GL({j},2) x GL({n - 1 - j},2)"
    if n <= 3:
        stab = [g for g in _full_left_stabilizer(n) if transform_member(n, g, member) == member]
        order = len(stab)
        t_ech = f2_echelon([r for r in member if r < (1 << n)])
        qs = [quad_value(n, r) for r in member]
        pivot = member[qs.index(1)]
        hyperplane = [r ^ (pivot if q else 0) for r, q in zip(member, qs) if r != pivot]
        unipotent = [
            g
            for g in stab
            if all(f2_vec_mat(r, g) == r for r in t_ech)
            and all(
                f2_reduce(f2_vec_mat(h, g) ^ h, t_ech) == 0 for h in hyperplane
            )
        ]
        u_order = len(unipotent)
    else:
        order, rem = divmod(left_stabilizer_order(n), orbit_size(n, j))
        assert rem == 0
        u_order, rem = divmod(order, levi_order)
        assert rem == 0
    assert order == u_order * levi_order
    assert u_order & (u_order - 1) == 0, "unipotent part must be a 2-group"
    return StabilizerInfo(j, order, u_order, levi)


def orbit_census(n, exhaustive=None):
    """One row per orbit of the left-half stabilizer on odd Lagrangians.

    exhaustive=None enumerates and partitions for n <= 3 and uses the
    closed-form sizes otherwise; the two routes are asserted against each
    other whenever enumeration runs.
    """
    if exhaustive is None:
        exhaustive = n <= 3
    if exhaustive:
        members = enumerate_odd_lagrangians(n)
        assert len(members) == total_odd_count(n)
        if n <= 3:
            orbits = orbit_partition(n, members)
            assert len(orbits) == n
            sizes = {}
            for orbit in orbits:
                js = {left_overlap(n, m) for m in orbit}
                assert len(js) == 1, "orbits are separated by the left overlap"
                sizes[js.pop()] = len(orbit)
            assert all(sizes[j] == orbit_size(n, j) for j in range(n))
        else:
            # certify instead of BFS: every member is carried onto its
            # standard representative by an explicit verified isometry
            sizes = {j: 0 for j in range(n)}
            reps = {j: standard_odd_lagrangian(n, j) for j in range(n)}
            for member in members:
                j = left_overlap(n, member)
                g = _canonicalizer(n, member)
                assert fixes_left_half(n, g) and is_isometry(n, g)
                assert transform_member(n, g, member) == reps[j]
                sizes[j] += 1
            assert all(sizes[j] == orbit_size(n, j) for j in range(n))
    rows = []
    for j in range(n):
        info = stabilizer_structure(n, standard_odd_lagrangian(n, j))
        size = orbit_size(n, j)
        assert size * info.order == left_stabilizer_order(n)
        rows.append(OrbitClass(j, size, info.order, info.unipotent_order, info.levi))
    return tuple(rows)
