"""Binary linear codes: duals, weight data, automorphisms, markings.

Codewords are bit-packed ints (bit i = coordinate i).  A BinaryCode is
identified with its row space; the stored generators are the canonical
reduced row-echelon basis, so equal codes compare equal.
"""

from dataclasses import dataclass
from importlib import resources

from .bits import f2_in_span, f2_kernel, f2_rref, f2_span, f2_transpose
from .stabsearch import stabilizer

__all__ = [
    "BinaryCode",
    "Marking",
    "hamming_code",
    "dual_code",
    "rm1_subcode",
    "code_automorphisms",
    "all_markings",
    "classify_markings",
]


@dataclass(frozen=True)
class BinaryCode:
    """Row space of `rows` inside F2^length (rows canonical RREF)."""

    length: int
    rows: tuple

    @classmethod
    def from_rows(cls, length, rows):
        for r in rows:
            if r >= 1 << length:
                raise ValueError("generator wider than the code length")
        return cls(length, f2_rref(rows))

    @property
    def dim(self):
        return len(self.rows)

    def words(self):
        """All 2^dim codewords as ints."""
        return f2_span(self.rows)

    def word_tuples(self):
        """All codewords as 0/1 tuples (coordinate i = tuple index i)."""
        return [tuple((w >> i) & 1 for i in range(self.length)) for w in self.words()]

    def contains(self, word):
        return f2_in_span(word, self.rows)

    def weight_enumerator(self):
        """Tuple a where a[w] = number of codewords of Hamming weight w."""
        counts = [0] * (self.length + 1)
        for w in self.words():
            counts[w.bit_count()] += 1
        return tuple(counts)

    def is_doubly_even(self):
        return all(w.bit_count() % 4 == 0 for w in self.words())

    def __str__(self):
        return f"[{self.length},{self.dim}] binary code"


def _rm1_rows(length):
    """All-ones plus the binary-digit indicator rows (first-order
    Reed-Muller generators when length is a power of two)."""
    nbits = (length - 1).bit_length()
    rows = [(1 << length) - 1]
    for b in range(nbits - 1, -1, -1):
        rows.append(sum(1 << i for i in range(length) if not (i >> b) & 1))
    return rows


def hamming_code(length):
    """The [8,4,4] extended Hamming code, or its fixed [16,5] companion.

    Length 8 is the first-order Reed-Muller code RM(1,3), which is the
    (doubly even, self-dual) extended Hamming code.  Length 16 is pinned to
    the RM(1,4) realization shipped in data/h16.txt.
    """
    if length == 8:
        return BinaryCode.from_rows(8, _rm1_rows(8))
    if length == 16:
        return _load_h16()
    raise ValueError("supported lengths are 8 and 16")


def _load_h16():
    text = resources.files("vftk").joinpath("data/h16.txt").read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    length, dim = map(int, lines[0].split())
    rows = []
    for ln in lines[1 : 1 + dim]:
        rows.append(sum(1 << i for i, ch in enumerate(ln) if ch == "1"))
    return BinaryCode.from_rows(length, rows)


def dual_code(c):
    """Orthogonal complement under the standard F2 dot product."""
    if not c.rows:
        return BinaryCode.from_rows(c.length, [1 << i for i in range(c.length)])
    cols = f2_transpose(c.rows, c.length)
    basis = f2_kernel(cols, c.length)
    return BinaryCode.from_rows(c.length, basis)


def rm1_subcode(k):
    """Dimension-k subcode of RM(1,4): the all-ones word plus the first
    k-1 coordinate-hyperplane words of length 16."""
    if not 1 <= k <= 5:
        raise ValueError("k must be in 1..5")
    return BinaryCode.from_rows(16, _rm1_rows(16)[:k])


def code_automorphisms(c, deadline=None):
    """Coordinate permutations preserving the code.

    Returns (generators, order): generators are permutation tuples, order
    is the exact group order from the stabilizer chain.
    """
    res = stabilizer(c.word_tuples(), c.length, 2, signed=False, deadline=deadline)
    gens = tuple(sigma for sigma, _ in res.generators)
    return gens, res.order


@dataclass(frozen=True)
class Marking:
    """A perfect matching of the coordinates {0..length-1}."""

    pairs: tuple

    @classmethod
    def from_pairs(cls, pairs):
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        flat = [i for p in norm for i in p]
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("pairs must partition the coordinates")
        return cls(norm)

    @property
    def length(self):
        return 2 * len(self.pairs)

    def permuted(self, sigma):
        return Marking.from_pairs(tuple((sigma[a], sigma[b]) for a, b in self.pairs))


def all_markings(length):
    """Every perfect matching of {0..length-1}; (length-1)!! of them."""
    if length % 2:
        raise ValueError("length must be even")

    def rec(points):
        if not points:
            yield ()
            return
        a = points[0]
        for i in range(1, len(points)):
            b = points[i]
            rest = points[1:i] + points[i + 1 :]
            for tail in rec(rest):
                yield ((a, b),) + tail

    return [Marking.from_pairs(p) for p in rec(tuple(range(length)))]


def classify_markings(c, deadline=None):
    """Orbits of all markings of c's coordinates under Aut(c).

    Returns (orbit list, aut_order); orbits are (representative, size)
    pairs with sizes summing to (length-1)!!.
    """
    gens, order = code_automorphisms(c, deadline=deadline)
    todo = set(all_markings(c.length))
    orbits = []
    while todo:
        rep = min(todo, key=lambda m: m.pairs)
        orbit = {rep}
        frontier = [rep]
        while frontier:
            m = frontier.pop()
            for sigma in gens:
                m2 = m.permuted(sigma)
                if m2 not in orbit:
                    orbit.add(m2)
                    frontier.append(m2)
        todo -= orbit
        orbits.append((rep, len(orbit)))
    orbits.sort(key=lambda t: t[1])
    return orbits, order
