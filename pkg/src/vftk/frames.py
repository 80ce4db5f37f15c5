"""Lattice frames, their Z4 glue codes, and frame-stabilizer invariants.

A frame of a rank-n even lattice is a set of n sign-pairs {x, -x} of
norm-4 vectors, pairwise orthogonal; its span M has Gram 4I in the frame
basis, and M <= L <= L* <= (1/4)M.  Reading inner products with the frame
vectors mod 4 embeds L/M as a subgroup of (Z/4)^n — the glue code.  The
monomial symmetries of the glue code are exactly the lattice
automorphisms that permute the frame, and everything else here (sign
subgroup, pointwise stabilizer, torus-intersection types, wreath-product
order formulas) is bookkeeping on top of that search.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import budget
from .abelian import group_order, quotient_divisors, type_string
from .f2codes import classify_markings, hamming_code
from .lattices import (
    IntegralLattice,
    ambient_to_basis,
    e8_lattice,
    lattice_from_code,
    short_vectors,
)
from .stabsearch import stabilizer

__all__ = [
    "LatticeFrame",
    "Z4Code",
    "FrameInvariants",
    "FrameClass",
    "FrameCensus",
    "W_E8_ORDER",
    "frame_from_marking",
    "find_frames",
    "glue_code",
    "abelian_type",
    "frame_stabilizer",
    "frame_invariants",
    "frame_torus_divisors",
    "monomial_to_isometry",
    "e8_frame_representatives",
    "classify_e8_frames",
    "gl2_order",
    "agl2_order",
    "order_sym_wr_agl",
    "frame_group_order",
]

# Order of the full isometry group of the E8 root lattice (pinned; the
# census cross-checks it through class size x stabilizer order).
W_E8_ORDER = 696729600


class LatticeFrame:
    """n orthogonal sign-pairs of norm-4 vectors, one chosen rep per pair."""

    __slots__ = ("lattice", "vectors")

    def __init__(self, lattice, vectors, validate=True):
        vectors = tuple(tuple(int(c) for c in v) for v in vectors)
        if validate:
            if len(vectors) != lattice.rank:
                raise ValueError("a frame needs one sign-pair per unit of rank")
            for i, x in enumerate(vectors):
                if lattice.norm(x) != 4:
                    raise ValueError(f"frame vector {i} has norm {lattice.norm(x)} != 4")
                for j in range(i):
                    if lattice.inner(vectors[j], x) != 0:
                        raise ValueError(f"frame vectors {j} and {i} are not orthogonal")
        self.lattice = lattice
        self.vectors = vectors

    @property
    def pair_count(self):
        return len(self.vectors)

    def reoriented(self, signs=None, order=None):
        """Same frame with representatives flipped by signs and pairs permuted."""
        vecs = list(self.vectors)
        if signs is not None:
            vecs = [tuple(s * c for c in v) for s, v in zip(signs, vecs)]
        if order is not None:
            vecs = [vecs[i] for i in order]
        return LatticeFrame(self.lattice, vecs, validate=False)

    def __eq__(self, other):
        if not isinstance(other, LatticeFrame):
            return NotImplemented
        mine = {frozenset((v, tuple(-c for c in v))) for v in self.vectors}
        theirs = {frozenset((v, tuple(-c for c in v))) for v in other.vectors}
        return self.lattice == other.lattice and mine == theirs

    def __repr__(self):
        return f"LatticeFrame({self.pair_count} pairs)"


@dataclass(frozen=True)
class Z4Code:
    """Additive subgroup of (Z/4)^n, stored as the full word set."""

    length: int
    words: frozenset

    @classmethod
    def from_generators(cls, length, generators):
        words = {(0,) * length}
        for g in generators:
            g = tuple(x % 4 for x in g)
            if len(g) != length:
                raise ValueError("generator length mismatch")
            words = {
                tuple((w[i] + m * g[i]) % 4 for i in range(length))
                for w in words
                for m in range(4)
            }
        return cls(length, frozenset(words))

    @property
    def order(self):
        return len(self.words)

    def __contains__(self, word):
        return tuple(x % 4 for x in word) in self.words

    def sorted_words(self):
        return sorted(self.words)


def frame_from_marking(lattice, marking):
    """Frame of a construction-A lattice from a coordinate pairing.

    Each marked pair {a, b} contributes the two orthogonal sign-pairs
    through 2(e_a + e_b) and 2(e_a - e_b) in ambient coordinates; both are
    norm 4 and land in the lattice for any binary code.
    """
    if lattice.ambient_rows is None:
        raise ValueError("frame_from_marking needs a construction-A lattice")
    n = lattice.rank
    if marking.length != n:
        raise ValueError("marking length must match the lattice rank")
    vecs = []
    for a, b in marking.pairs:
        for sign in (1, -1):
            y = [0] * n
            y[a] = 2
            y[b] = 2 * sign
            vecs.append(ambient_to_basis(lattice, y))
    return LatticeFrame(lattice, vecs)


# --- frame enumeration ----------------------------------------------------


def _norm4_sign_reps(lattice, deadline=None):
    """One representative per sign-pair of norm-4 vectors, sorted."""
    reps = set()
    for v in short_vectors(lattice, 4, deadline=deadline):
        neg = tuple(-c for c in v)
        reps.add(max(v, neg))
    return sorted(reps)


def _orthogonality_masks(lattice, reps):
    adj = []
    for i, v in enumerate(reps):
        mask = 0
        for j, w in enumerate(reps):
            if j != i and lattice.inner(v, w) == 0:
                mask |= 1 << j
        adj.append(mask)
    return adj


def _enumerate_cliques(adj, size, deadline, on_enter, on_leave, on_leaf):
    """All size-cliques in increasing vertex order, with DFS hooks."""
    n = len(adj)
    nodes = 0

    def rec(cands, depth):
        nonlocal nodes
        if depth == size:
            on_leaf()
            return
        need = size - depth
        while cands:
            nodes += 1
            if nodes % 4096 == 0:
                budget.check(deadline)
            if cands.bit_count() < need:
                return
            bit = cands & -cands
            cands ^= bit
            v = bit.bit_length() - 1
            on_enter(v)
            rec(cands & adj[v], depth + 1)
            on_leave(v)

    rec((1 << n) - 1, 0)


def find_frames(lattice, deadline=None):
    """All frames of a definite even lattice (small lattices only).

    Backtracks over the orthogonality graph of norm-4 sign-pairs; returns
    every maximal-rank configuration as a LatticeFrame.  The list can be
    huge (E8 has 382185 frames): for censuses use classify_e8_frames or
    the clique hooks directly.
    """
    reps = _norm4_sign_reps(lattice, deadline=deadline)
    if len(reps) < lattice.rank:
        return []
    adj = _orthogonality_masks(lattice, reps)
    chosen = []
    out = []
    _enumerate_cliques(
        adj,
        lattice.rank,
        deadline,
        chosen.append,
        lambda v: chosen.pop(),
        lambda: out.append(LatticeFrame(lattice, [reps[i] for i in chosen], validate=False)),
    )
    return out


# --- glue code and invariants ---------------------------------------------


def glue_code(lattice, frame):
    """Image of L in (Z/4)^n via v -> ((v, x_i) mod 4) over the frame."""
    n = lattice.rank
    gens = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        row = tuple(int(lattice.inner(e, x)) % 4 for x in frame.vectors)
        gens.append(row)
    return Z4Code.from_generators(frame.pair_count, gens)


def abelian_type(code):
    """(l, k) with the code isomorphic to 2^l x 4^k as an abelian group."""
    n = code.length
    gens = [tuple(int(x) for x in g) for g in code.words]
    four = [tuple(4 * int(i == j) for j in range(n)) for i in range(n)]
    divisors = quotient_divisors(gens + four, four)
    counts = {2: 0, 4: 0}
    for d in divisors:
        if d not in counts:
            raise ValueError(f"unexpected elementary divisor {d}")
        counts[d] += 1
    return counts[2], counts[4]


def frame_stabilizer(lattice, frame, deadline=None):
    """Monomial stabilizer of the glue code: all of W_X, exactly.

    Returns the search result: order = |W_X|, sign_order = |D_X| (the
    sign-only monomials), with generators as (sigma, signs) pairs.
    """
    code = glue_code(lattice, frame)
    return stabilizer(code.sorted_words(), frame.pair_count, 4, signed=True, deadline=deadline)


def frame_torus_divisors(lattice, frame, denom):
    """Elementary divisors of ((1/denom)M + L*)/L* for the frame span M."""
    ginv = lattice.gram_inverse()
    scaled = [tuple(Fraction(c, denom) for c in x) for x in frame.vectors]
    return quotient_divisors(list(scaled) + list(ginv), list(ginv))


@dataclass(frozen=True)
class FrameInvariants:
    """Exact invariants of one frame: glue-code shape and stabilizer orders.

    two_rank/four_rank are the (l, k) of the glue code 2^l x 4^k;
    sign_log2 is e with |D_X| = 2^e.  pointwise_order is the order of the
    subgroup fixing all 2n frame symbols, 2^(l+2k+e); the quotient by it
    is a sign wreath of the permutation image, of order perm_image_order =
    2^n * |W_X|/|D_X|; full_order is their product.  torus_stab_* describe
    ((1/8)M + L*)/L*, the frame-stabilizing part of the ambient torus.
    """

    pair_count: int
    two_rank: int
    four_rank: int
    sign_log2: int
    glue_order: int
    monomial_order: int
    sign_order: int
    miyamoto_order: int
    pointwise_order: int
    torus_stab_divisors: tuple
    torus_stab_type: str
    torus_stab_order: int
    perm_image_order: int
    full_order: int


def frame_invariants(lattice, frame, deadline=None):
    """Compute every FrameInvariants field for a frame (search included)."""
    code = glue_code(lattice, frame)
    two_rank, four_rank = abelian_type(code)
    stab = frame_stabilizer(lattice, frame, deadline=deadline)
    sign_log2 = stab.sign_order.bit_length() - 1
    if 1 << sign_log2 != stab.sign_order:
        raise AssertionError("sign subgroup order must be a power of two")
    n = frame.pair_count
    torus = frame_torus_divisors(lattice, frame, 8)
    pointwise = code.order * stab.sign_order
    perm_image = (1 << n) * (stab.order // stab.sign_order)
    return FrameInvariants(
        pair_count=n,
        two_rank=two_rank,
        four_rank=four_rank,
        sign_log2=sign_log2,
        glue_order=code.order,
        monomial_order=stab.order,
        sign_order=stab.sign_order,
        miyamoto_order=1 << four_rank,
        pointwise_order=pointwise,
        torus_stab_divisors=torus,
        torus_stab_type=type_string(torus),
        torus_stab_order=group_order(torus),
        perm_image_order=perm_image,
        full_order=pointwise * perm_image,
    )


def monomial_to_isometry(lattice, frame, sigma, signs):
    """Integer isometry sending x_p to signs[p] * x_{sigma[p]}.

    Raises ValueError if the monomial map does not preserve the lattice
    (equivalently, does not preserve the glue code).
    """
    n = lattice.rank
    vecs = frame.vectors
    rows = []
    for j in range(n):
        e = tuple(int(t == j) for t in range(n))
        acc = [Fraction(0)] * n
        for p in range(n):
            c = Fraction(int(lattice.inner(e, vecs[p])) * signs[p], 4)
            if c:
                tgt = vecs[sigma[p]]
                for t in range(n):
                    acc[t] += c * tgt[t]
        if any(f.denominator != 1 for f in acc):
            raise ValueError("monomial map does not preserve the lattice")
        rows.append(tuple(int(f) for f in acc))
    # exact isometry check: W G W^T == G
    g = lattice.gram2
    for i in range(n):
        for j in range(i + 1):
            lhs = 2 * lattice.inner(rows[i], rows[j])
            if lhs != g[i][j]:
                raise AssertionError("constructed map is not an isometry")
    return tuple(rows)


# --- the E8 table and census ----------------------------------------------


def _e8_pair_masks(lattice, reps):
    """8-bit mask per rep vector: bit j = (e_j, x) mod 2."""
    n = lattice.rank
    masks = []
    for v in reps:
        m = 0
        for j in range(n):
            e = tuple(int(i == j) for i in range(n))
            if int(lattice.inner(e, v)) & 1:
                m |= 1 << j
        masks.append(m)
    return masks


@lru_cache(maxsize=None)
def e8_frame_representatives():
    """One E8 frame per glue-code class, keyed by four_rank k in 1..4.

    k = 1, 2, 3 come from the three marking classes of the [8,4] Hamming
    code; k = 4 is found by a short orthogonality-graph search (it is not
    realized by any marking).
    """
    e8 = e8_lattice()
    out = {}
    orbits, _ = classify_markings(hamming_code(8))
    for rep, _size in orbits:
        frame = frame_from_marking(e8, rep)
        _, k = abelian_type(glue_code(e8, frame))
        out[k] = frame
    missing = {1, 2, 3, 4} - set(out)
    if missing != {4}:
        raise AssertionError(f"marking classes gave unexpected ranks {sorted(out)}")
    reps = _norm4_sign_reps(e8)
    adj = _orthogonality_masks(e8, reps)
    masks = _e8_pair_masks(e8, reps)
    found = _search_frame_of_rank(e8, reps, adj, masks, 4)
    if found is None:
        raise AssertionError("no rank-4 glue class found in E8")
    out[4] = found
    return out


class _Found(Exception):
    pass


def _search_frame_of_rank(lattice, reps, adj, masks, want):
    """First frame whose pair-mask matrix has F2-rank `want` (early exit)."""
    basis = [0] * 8
    rank = 0
    chosen = []
    pushed = []
    hit = []

    def enter(v):
        nonlocal rank
        chosen.append(v)
        cur = masks[v]
        while cur:
            lb = cur.bit_length() - 1
            if not basis[lb]:
                basis[lb] = cur
                rank += 1
                pushed.append(lb)
                return
            cur ^= basis[lb]
        pushed.append(-1)

    def leave(v):
        nonlocal rank
        chosen.pop()
        lb = pushed.pop()
        if lb >= 0:
            basis[lb] = 0
            rank -= 1

    def leaf():
        if rank == want and not hit:
            hit.append(LatticeFrame(lattice, [reps[i] for i in chosen], validate=False))
            raise _Found

    try:
        _enumerate_cliques(adj, lattice.rank, None, enter, leave, leaf)
    except _Found:
        pass
    return hit[0] if hit else None


@dataclass(frozen=True)
class FrameClass:
    """One census class: glue-code shape, count, and stabilizer orders."""

    four_rank: int
    two_rank: int
    delta_type: str
    count: int
    monomial_order: int
    sign_order: int
    representative: LatticeFrame


@dataclass(frozen=True)
class FrameCensus:
    classes: tuple
    total: int
    note: str


def classify_e8_frames(deadline=None):
    """Exhaustive census of E8 frames, partitioned by glue-code class.

    Every frame is visited (symmetry is not quotiented) and classified by
    the F2-rank k of its pair-mask matrix, which determines the glue type
    2^(8-2k) x 4^k here.  Each class then gets a stabilizer search on one
    representative, so class size x |W_X| can be checked against the E8
    isometry group order.
    """
    e8 = e8_lattice()
    reps = _norm4_sign_reps(e8, deadline=deadline)
    adj = _orthogonality_masks(e8, reps)
    masks = _e8_pair_masks(e8, reps)

    counts = {}
    first = {}
    basis = [0] * 8
    rank = 0
    chosen = []
    pushed = []

    def enter(v):
        nonlocal rank
        chosen.append(v)
        cur = masks[v]
        while cur:
            lb = cur.bit_length() - 1
            if not basis[lb]:
                basis[lb] = cur
                rank += 1
                pushed.append(lb)
                return
            cur ^= basis[lb]
        pushed.append(-1)

    def leave(v):
        nonlocal rank
        chosen.pop()
        lb = pushed.pop()
        if lb >= 0:
            basis[lb] = 0
            rank -= 1

    def leaf():
        counts[rank] = counts.get(rank, 0) + 1
        if rank not in first:
            first[rank] = list(chosen)

    _enumerate_cliques(adj, 8, deadline, enter, leave, leaf)

    classes = []
    for k in sorted(counts):
        frame = LatticeFrame(e8, [reps[i] for i in first[k]], validate=False)
        code = glue_code(e8, frame)
        two_rank, four_rank = abelian_type(code)
        if four_rank != k:
            raise AssertionError("leaf rank disagrees with glue-code type")
        stab = frame_stabilizer(e8, frame, deadline=deadline)
        classes.append(
            FrameClass(
                four_rank=k,
                two_rank=two_rank,
                delta_type=type_string((2,) * two_rank + (4,) * four_rank),
                count=counts[k],
                monomial_order=stab.order,
                sign_order=stab.sign_order,
                representative=frame,
            )
        )
    note = (
        "Frames with k = 5 invariants exist only through the order formulas "
        "(no frame sublattice realizes them); the k = 4 class supports two "
        "inequivalent framings, so the frame classification above has four "
        "rows while the full framed-symmetry classification has five."
    )
    return FrameCensus(classes=tuple(classes), total=sum(counts.values()), note=note)


# --- order formulas ---------------------------------------------------------


def gl2_order(n):
    """|GL(n, 2)|."""
    return prod((1 << n) - (1 << i) for i in range(n))


def agl2_order(n):
    """|AGL(n, 2)| = 2^n |GL(n, 2)|."""
    return (1 << n) * gl2_order(n)


def order_sym_wr_agl(k):
    """|Sym_d wr AGL(k-1, 2)| with d = 2^(5-k), the permutation part
    of the length-16 frame stabilizer for the k-th nested code."""
    if not 1 <= k <= 5:
        raise ValueError("k must be in 1..5")
    d = 1 << (5 - k)
    return factorial(d) ** (1 << (k - 1)) * agl2_order(k - 1)


@lru_cache(maxsize=None)
def _e8_gc_orders():
    e8 = e8_lattice()
    out = {}
    for k, frame in e8_frame_representatives().items():
        inv = frame_invariants(e8, frame)
        out[k] = inv.pointwise_order
    return out


def frame_group_order(k):
    """Full stabilizer order of the k-th standard 16-pair frame.

    The pointwise part is the computed E8 value for k <= 4 and 2^5 for
    k = 5 (where the pointwise and sign groups coincide); the quotient is
    the wreath product counted by order_sym_wr_agl.
    """
    if not 1 <= k <= 5:
        raise ValueError("k must be in 1..5")
    gc = 32 if k == 5 else _e8_gc_orders()[k]
    return gc * order_sym_wr_agl(k)
