"""Stabilizer search in groups of (signed) coordinate permutations.

The object being stabilized is a finite set of words over Z/m: a monomial
map (sigma, s) sends a word w to w' with w'[sigma[p]] = s[p]*w[p] mod m.
`stabilizer` computes the full stabilizer's order, its sign-only subgroup,
and a generating set, via a stabilizer chain over coordinate positions:

    |Stab| = |sign part| * prod_j |orbit of j under the subgroup fixing
                                   positions 0..j-1|

Each orbit membership question is answered by a depth-first existence
search over images of positions, pruned by comparing the multiset of
(signed) word restrictions on the source prefix with the multiset of word
restrictions on the candidate target prefix.  At full depth the multiset
condition is equivalent to actual stabilization, so every accepted leaf is
a witness.  Restriction multisets are memoized across the whole chain.

Signless searches (m = 2, or sign=False) are the same with the sign
machinery switched off.
"""

from collections import Counter
from dataclasses import dataclass

from . import budget
from .bits import f2_echelon

__all__ = [
    "StabilizerResult",
    "stabilizer",
    "perm_compose",
    "perm_inverse",
    "brute_force_monomials",
    "brute_force_perms",
]

CHECK_EVERY = 4096  # nodes between deadline polls


@dataclass(frozen=True)
class StabilizerResult:
    """Order and generators of a (signed) permutation stabilizer.

    generators are (sigma, signs) pairs; sigma maps position p to
    sigma[p], signs[p] multiplies the value leaving position p.  The sign
    part alone has order sign_order, and order = sign_order times the
    product of orbit_sizes.
    """

    order: int
    sign_order: int
    orbit_sizes: tuple
    generators: tuple
    sign_basis: tuple


def perm_compose(a, b):
    """Permutation doing a first, then b."""
    return tuple(b[a[p]] for p in range(len(a)))


def perm_inverse(a):
    out = [0] * len(a)
    for p, q in enumerate(a):
        out[q] = p
    return tuple(out)


class _Search:
    def __init__(self, words, n, modulus, signed, deadline):
        self.words = [tuple(w) for w in words]
        self.wordset = frozenset(self.words)
        self.n = n
        self.modulus = modulus
        self.deadline = deadline
        self.nodes = 0
        # sign on position p can only matter if some word has a value there
        # that differs from its own negation mod m
        self.sign_matters = [
            signed and any((-w[p]) % modulus != w[p] for w in self.words)
            for p in range(n)
        ]
        self.signed = signed
        self._tmemo = {}
        self._smemo = {}

    # --- restriction multisets ----------------------------------------
    def tcount(self, tpos):
        """Counter of word restrictions to target positions tpos."""
        got = self._tmemo.get(tpos)
        if got is None:
            got = Counter(tuple(w[p] for p in tpos) for w in self.words)
            self._tmemo[tpos] = got
        return got

    def scount(self, signs):
        """Counter of signed word restrictions to source prefix 0..len-1."""
        got = self._smemo.get(signs)
        if got is None:
            m = self.modulus
            got = Counter(
                tuple((s * w[p]) % m for p, s in enumerate(signs))
                for w in self.words
            )
            self._smemo[signs] = got
        return got

    # --- existence query ------------------------------------------------
    def exists(self, fixed, target):
        """Witness (sigma, signs) fixing positions < fixed and sending
        position `fixed` to `target`, or None."""
        used = [False] * self.n
        return self._dfs(0, fixed, target, used, (), ())

    def _dfs(self, depth, fixed, target, used, tpos, signs):
        self.nodes += 1
        if self.nodes % CHECK_EVERY == 0:
            budget.check(self.deadline)
        if depth == self.n:
            return tpos, signs
        if depth < fixed:
            candidates = (depth,)
        elif depth == fixed:
            candidates = (target,)
        else:
            candidates = tuple(q for q in range(self.n) if not used[q])
        sign_options = (1, -1) if self.sign_matters[depth] else (1,)
        for q in candidates:
            if used[q]:
                continue
            new_tpos = tpos + (q,)
            tcnt = self.tcount(new_tpos)
            for s in sign_options:
                new_signs = signs + (s,)
                if self.scount(new_signs) != tcnt:
                    continue
                used[q] = True
                got = self._dfs(depth + 1, fixed, target, used, new_tpos, new_signs)
                used[q] = False
                if got is not None:
                    return got
        return None

    # --- sign subgroup ----------------------------------------------------
    def sign_subgroup(self):
        """All sign vectors stabilizing the word set (brute force, 2^n)."""
        n, m = self.n, self.modulus
        if not self.signed:
            return [tuple([1] * n)], 1
        free = [p for p in range(n) if self.sign_matters[p]]
        found = []
        for mask in range(1 << len(free)):
            signs = [1] * n
            bits = mask
            i = 0
            while bits:
                if bits & 1:
                    signs[free[i]] = -1
                bits >>= 1
                i += 1
            ok = True
            for w in self.words:
                if tuple((s * x) % m for s, x in zip(signs, w)) not in self.wordset:
                    ok = False
                    break
            if ok:
                found.append(tuple(signs))
        # positions where signs never matter contribute a free factor of 2
        free_factor = 1 << (n - len(free))
        return found, free_factor


def stabilizer(words, n, modulus, signed=True, deadline=None):
    """Full (signed) permutation stabilizer of a set of words in (Z/m)^n."""
    search = _Search(words, n, modulus, signed, deadline)
    identity = tuple(range(n))

    if signed:
        sign_vectors, free_factor = search.sign_subgroup()
        sign_order = len(sign_vectors) * free_factor
        # reduce the found subgroup to an F2 basis (bitmask of -1 entries)
        masks = [sum(1 << p for p in range(n) if s[p] == -1) for s in sign_vectors]
        sign_basis = []
        for mask in f2_echelon(masks):
            s = tuple(-1 if (mask >> p) & 1 else 1 for p in range(n))
            sign_basis.append((identity, s))
        for p in range(n):
            if not search.sign_matters[p]:
                s = [1] * n
                s[p] = -1
                sign_basis.append((identity, tuple(s)))
    else:
        sign_order = 1
        sign_basis = []

    orbit_sizes = []
    generators = []
    for level in range(n):
        orbit = {level}
        level_gens = []

        def close(orbit, gens):
            frontier = list(orbit)
            while frontier:
                pt = frontier.pop()
                for sigma, _ in gens:
                    q = sigma[pt]
                    if q not in orbit:
                        orbit.add(q)
                        frontier.append(q)
                    q = perm_inverse(sigma)[pt]
                    if q not in orbit:
                        orbit.add(q)
                        frontier.append(q)

        for target in range(level + 1, n):
            if target in orbit:
                continue
            witness = search.exists(level, target)
            if witness is not None:
                tpos, signs = witness
                sigma = tuple(tpos)
                level_gens.append((sigma, signs))
                generators.append((sigma, signs))
                orbit.add(target)
                close(orbit, level_gens)
        orbit_sizes.append(len(orbit))

    order = sign_order
    for size in orbit_sizes:
        order *= size
    return StabilizerResult(
        order=order,
        sign_order=sign_order,
        orbit_sizes=tuple(orbit_sizes),
        generators=tuple(generators),
        sign_basis=tuple(sign_basis),
    )


def apply_monomial(word, sigma, signs, modulus):
    out = [0] * len(word)
    for p, v in enumerate(word):
        out[sigma[p]] = (signs[p] * v) % modulus
    return tuple(out)


def brute_force_monomials(words, n, modulus):
    """All (sigma, signs) stabilizing the word set; oracle for small n."""
    from itertools import permutations, product

    wordset = frozenset(tuple(w) for w in words)
    out = []
    for sigma in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if all(apply_monomial(w, sigma, signs, modulus) in wordset for w in wordset):
                out.append((sigma, signs))
    return out


def brute_force_perms(words, n):
    """All coordinate permutations stabilizing a set of binary words."""
    from itertools import permutations

    wordset = frozenset(tuple(w) for w in words)
    out = []
    for sigma in permutations(range(n)):
        if all(apply_monomial(w, sigma, [1] * n, 2) in wordset for w in wordset):
            out.append(sigma)
    return out
