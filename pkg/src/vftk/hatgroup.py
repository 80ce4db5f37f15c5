"""Central extension of an even lattice by {±1}, its lifted isometries,
the exact torus action on frame symbols, and the involution bookkeeping
for the nested length-16 codes.

The extension is presented by a bilinear sign cocycle on basis
coordinates.  Everything is exact: signs are +-1 ints, torus phases are
Fractions mod 1, and the "eigenspace dimensions" of the involution
classifier are closed-form integers — no analytic objects anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .f2codes import rm1_subcode
from .intmat import identity, mat_mul, transpose

__all__ = [
    "EpsilonCocycle",
    "HatElement",
    "LiftedAutomorphism",
    "TorusFrameAction",
    "LiftedFrameStabilizer",
    "standard_cocycle",
    "lift_automorphism",
    "all_lifts",
    "torus_action_on_frame",
    "frame_symbol_action",
    "lifted_frame_stabilizer",
    "miyamoto_involutions",
    "frame_index_characters",
    "weight_one_dim",
    "involution_class",
    "InvolutionReport",
]


@dataclass(frozen=True)
class EpsilonCocycle:
    """Sign cocycle eps(x, y) = (-1)^(x E y^T) on an even lattice.

    The exponent matrix E has (e_i, e_j) mod 2 below the diagonal, zeros
    above, and (e_i, e_i)/2 mod 2 on the diagonal; this realizes the two
    defining relations: squares (s,x)^2 = ((-1)^((x,x)/2), 2x) and
    commutators picking up (-1)^((x,y)).
    """

    lattice: object
    exponents: tuple  # n x n rows of 0/1 ints

    @property
    def rank(self):
        return len(self.exponents)

    def epsilon(self, x, y):
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = self.exponents[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return -1 if total & 1 else 1

    # --- group law of the extension ---------------------------------------
    def product(self, a, b):
        sign = a.sign * b.sign * self.epsilon(a.vec, b.vec)
        return HatElement(sign, tuple(p + q for p, q in zip(a.vec, b.vec)))

    def inverse(self, a):
        sign = a.sign * self.epsilon(a.vec, a.vec)
        return HatElement(sign, tuple(-p for p in a.vec))

    def square(self, a):
        return self.product(a, a)

    def commutator(self, a, b):
        ab = self.product(a, b)
        return self.product(ab, self.product(self.inverse(a), self.inverse(b)))

    def identity_element(self):
        return HatElement(1, (0,) * self.rank)


@dataclass(frozen=True)
class HatElement:
    """Element (sign, x) of the extension; sign in {+1, -1}, x in L."""

    sign: int
    vec: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def standard_cocycle(lattice):
    """The upper-triangular-trivial cocycle of an even lattice."""
    if not lattice.is_even:
        raise ValueError("the sign extension needs an even lattice")
    n = lattice.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i > j:
                row.append((lattice.gram2[i][j] // 2) % 2)
            elif i == j:
                row.append((lattice.gram2[i][i] // 4) % 2)
            else:
                row.append(0)
        rows.append(tuple(row))
    return EpsilonCocycle(lattice, tuple(rows))


def _lift_cmatrix(cocycle, w):
    """C = E + W E W^T mod 2; the obstruction bilinear form of the lift."""
    e = cocycle.exponents
    wewt = mat_mul(mat_mul(w, e), transpose(w))
    n = len(e)
    return tuple(
        tuple((e[i][j] + wewt[i][j]) % 2 for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True)
class LiftedAutomorphism:
    """Extension automorphism (s, x) -> (s * mu(x), x W) over an isometry W.

    mu is determined by free sign bits on the basis plus the closed-form
    quadratic correction from the cocycle; the 2^n choices of mu_bits are
    exactly the lifts of W.
    """

    cocycle: EpsilonCocycle
    matrix: tuple
    mu_bits: tuple
    cmatrix: tuple

    def mu_exponent(self, x):
        c = self.cmatrix
        total = sum(m * xi for m, xi in zip(self.mu_bits, x))
        n = len(x)
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            if c[i][i]:
                total += (xi * (xi - 1) // 2) * c[i][i]
            row = c[i]
            for j in range(i + 1, n):
                if x[j]:
                    total += row[j] * xi * x[j]
        return total % 2

    def mu(self, x):
        return -1 if self.mu_exponent(x) else 1

    def apply(self, h):
        w = self.matrix
        n = len(w)
        img = tuple(sum(h.vec[j] * w[j][t] for j in range(n)) for t in range(n))
        return HatElement(h.sign * self.mu(h.vec), img)

    def compose(self, other):
        """This lift followed by `other` (a lift of matrix * other.matrix)."""
        w = mat_mul(self.matrix, other.matrix)
        n = len(w)
        bits = []
        for i in range(n):
            e = tuple(int(t == i) for t in range(n))
            s = self.mu_exponent(e) + other.mu_exponent(self._row_image(e))
            bits.append(s % 2)
        return lift_automorphism(self.cocycle, w, tuple(bits))

    def inverse(self):
        winv = _int_matrix_inverse(self.matrix)
        n = len(winv)
        bits = []
        for i in range(n):
            e = tuple(int(t == i) for t in range(n))
            bits.append(self.mu_exponent(_vec_mat_int(e, winv)))
        return lift_automorphism(self.cocycle, winv, tuple(bits))

    def is_kernel_element(self):
        n = len(self.matrix)
        return self.matrix == identity(n)

    def _row_image(self, x):
        w = self.matrix
        n = len(w)
        return tuple(sum(x[j] * w[j][t] for j in range(n)) for t in range(n))


def _vec_mat_int(v, m):
    n = len(m)
    return tuple(sum(v[j] * m[j][t] for j in range(n)) for t in range(n))


def _int_matrix_inverse(w):
    from .intmat import inverse, mat_frac

    inv = inverse(mat_frac(w))
    out = []
    for row in inv:
        if any(f.denominator != 1 for f in row):
            raise ValueError("matrix is not invertible over the integers")
        out.append(tuple(int(f) for f in row))
    return tuple(out)


def lift_automorphism(cocycle, w, mu_bits=None):
    """Lift of the isometry w with the given free sign bits (default all 0)."""
    lattice = cocycle.lattice
    n = cocycle.rank
    w = tuple(tuple(int(x) for x in row) for row in w)
    g = lattice.gram2
    for i in range(n):
        for j in range(i + 1):
            if 2 * lattice.inner(w[i], w[j]) != g[i][j]:
                raise ValueError("matrix does not preserve the bilinear form")
    if mu_bits is None:
        mu_bits = (0,) * n
    mu_bits = tuple(int(b) % 2 for b in mu_bits)
    if len(mu_bits) != n:
        raise ValueError("one mu bit per basis vector")
    return LiftedAutomorphism(cocycle, w, mu_bits, _lift_cmatrix(cocycle, w))


def all_lifts(cocycle, w):
    """All 2^n lifts of the isometry w."""
    n = cocycle.rank
    return [lift_automorphism(cocycle, w, bits) for bits in iproduct((0, 1), repeat=n)]


# --- torus action on frame symbols ------------------------------------------


@dataclass(frozen=True)
class TorusFrameAction:
    """Exact phases (h, x_i) mod 1 of a torus parameter on the frame pairs.

    The frame symbols are fixed iff every phase is 0 (h in (1/4)M + dual);
    they are permuted within pairs iff every phase is 0 or 1/2 (h in
    (1/8)M + dual), the half phases swapping the two symbols of a pair.
    """

    phases: tuple
    fixes_frame: bool
    stabilizes_frame: bool
    swaps: tuple


def torus_action_on_frame(lattice, h, frame):
    h = tuple(Fraction(c) for c in h)
    phases = []
    for x in frame.vectors:
        val = sum(hc * Fraction(g) for hc, g in zip(h, _gram_column(lattice, x)))
        phases.append(val % 1)
    phases = tuple(phases)
    half = Fraction(1, 2)
    return TorusFrameAction(
        phases=phases,
        fixes_frame=all(p == 0 for p in phases),
        stabilizes_frame=all(p == 0 or p == half for p in phases),
        swaps=tuple(p == half for p in phases),
    )


def _gram_column(lattice, x):
    """(e_j, x) for all j, i.e. the row x of gram2 halved, as Fractions."""
    n = lattice.rank
    out = []
    for j in range(n):
        tot = sum(lattice.gram2[j][t] * x[t] for t in range(n))
        out.append(Fraction(tot, 2))
    return out


def frame_symbol_action(lattice, frame, lift):
    """Action of a lift on the 2n frame symbols, as (sigma, sign flips).

    The lift's matrix must be monomial on the frame: x_p -> +-x_{sigma(p)}.
    The symbol pair p goes to pair sigma[p], with the two symbols swapped
    exactly when mu(x_p) = -1 (the +- label tracks mu, the sign of the
    frame vector drops out).
    """
    vecs = frame.vectors
    index = {}
    for q, x in enumerate(vecs):
        index[x] = q
        index[tuple(-c for c in x)] = q
    sigma = []
    flips = []
    for p, x in enumerate(vecs):
        img = lift._row_image(x)
        if img not in index:
            raise ValueError("lift is not monomial on the frame")
        sigma.append(index[img])
        flips.append(lift.mu(x) == -1)
    return tuple(sigma), tuple(flips)


@dataclass(frozen=True)
class LiftedFrameStabilizer:
    """Order and shape of the frame stabilizer among lifted monomials."""

    order: int
    kernel_order: int
    sign_order: int
    monomial_order: int
    structure: str
    samples_checked: int


def lifted_frame_stabilizer(lattice, frame, stab=None, deadline=None):
    """Stabilizer of the 2n-symbol frame inside the lifted monomial group.

    A lifted monomial stabilizes every symbol pair iff its underlying
    isometry acts by signs alone, so the order is 2^n * (sign subgroup
    order); the verification applies sampled lifts symbolically.  Inside
    the full normalizer (torus included) the stabilizer is the extension
    of the whole monomial stabilizer by the torus part, which is what the
    reported structure string records.
    """
    from .frames import frame_stabilizer, monomial_to_isometry

    if stab is None:
        stab = frame_stabilizer(lattice, frame, deadline=deadline)
    n = frame.pair_count
    cocycle = standard_cocycle(lattice)
    checked = 0
    ident = tuple(range(n))
    # sign-only monomials must fix every pair; others must move one
    for sigma, signs in [(ident, (1,) * n)] + list(stab.generators):
        w = monomial_to_isometry(lattice, frame, sigma, signs)
        lift = lift_automorphism(cocycle, w)
        got_sigma, _flips = frame_symbol_action(lattice, frame, lift)
        if got_sigma != sigma:
            raise AssertionError("symbol action disagrees with the monomial")
        checked += 1
    order = (1 << n) * stab.sign_order
    structure = (
        f"2^{n} kernel . sign subgroup (order {stab.sign_order}) inside the "
        f"lifted monomial group; torus stabilizer . monomial stabilizer "
        f"(order {stab.order}) inside the full frame normalizer"
    )
    return LiftedFrameStabilizer(
        order=order,
        kernel_order=1 << n,
        sign_order=stab.sign_order,
        monomial_order=stab.order,
        structure=structure,
        samples_checked=checked,
    )


# --- involutions of the nested length-16 codes -------------------------------


def frame_index_characters(k):
    """Character of the k-th nested code attached to each of 16 indices.

    Index i yields the character I -> (-1)^(I_i); in generator coordinates
    that is the i-th column of the generator matrix, as a k-bit tuple.
    """
    code = rm1_subcode(k)
    return tuple(
        tuple((g >> i) & 1 for g in code.rows) for i in range(code.length)
    )


def miyamoto_involutions(k):
    """The distinct index characters; always 2^(k-1) of them.

    The set is an affine coset: every member evaluates the all-ones word
    to -1, and the full coset of that hyperplane is hit.
    """
    return frozenset(frame_index_characters(k))


def weight_one_dim(k, weight):
    """Weight-one subspace dimension attached to a word of the k-th code.

    Only weights 0, 8, 16 occur in these codes; the three values sum over
    the whole code to 248 for every k.
    """
    if weight == 0:
        return 8 * ((1 << (5 - k)) - 1)
    if weight in (8, 16):
        return 1 << (8 - k)
    raise ValueError(f"no word of weight {weight} in the nested codes")


@dataclass(frozen=True)
class InvolutionReport:
    minus_dim: int
    plus_dim: int
    label: str


def involution_class(k, chi):
    """Conjugacy class of the involution attached to a nontrivial character.

    The -1-eigenspace dimension on the weight-one space is the sum of
    weight_one_dim over the words the character negates; 128 means class
    2B, 112 would mean 2A.
    """
    chi = tuple(int(b) % 2 for b in chi)
    if len(chi) != k:
        raise ValueError("character must give one bit per generator")
    if not any(chi):
        raise ValueError("character is trivial")
    code = rm1_subcode(k)
    minus = 0
    total = 0
    for coeffs in iproduct((0, 1), repeat=k):
        word = 0
        for c, g in zip(coeffs, code.rows):
            if c:
                word ^= g
        dim = weight_one_dim(k, bin(word).count("1"))
        total += dim
        if sum(c * b for c, b in zip(coeffs, chi)) % 2:
            minus += dim
    if total != 248:
        raise AssertionError("weight-one dimensions no longer sum to 248")
    label = "2B" if minus == 128 else ("2A" if minus == 112 else "unknown")
    return InvolutionReport(minus_dim=minus, plus_dim=total - minus, label=label)
