import math
import random

from vftk.f2codes import (
    BinaryCode,
    Marking,
    all_markings,
    classify_markings,
    code_automorphisms,
    dual_code,
    hamming_code,
    rm1_subcode,
)
from vftk.stabsearch import brute_force_perms


def test_hamming8_parameters():
    h8 = hamming_code(8)
    assert h8.length == 8 and h8.dim == 4
    assert len(h8.words()) == 16
    assert h8.weight_enumerator() == (1, 0, 0, 0, 14, 0, 0, 0, 1)
    assert h8.is_doubly_even()


def test_hamming8_self_dual():
    h8 = hamming_code(8)
    assert dual_code(h8) == h8


def test_hamming16_is_rm1_chain_top():
    h16 = hamming_code(16)
    assert h16.length == 16 and h16.dim == 5
    assert h16 == rm1_subcode(5)
    assert dual_code(h16).dim == 11
    # doubly even, contained in its dual
    assert h16.is_doubly_even()
    for r in h16.rows:
        assert dual_code(h16).contains(r)


def test_dual_of_dual():
    rng = random.Random(21)
    for _ in range(20):
        length = rng.randint(1, 10)
        rows = [rng.randrange(1 << length) for _ in range(rng.randint(0, 4))]
        c = BinaryCode.from_rows(length, rows)
        assert dual_code(dual_code(c)) == c
        assert c.dim + dual_code(c).dim == length


def test_dual_of_full_space_is_zero():
    full = BinaryCode.from_rows(8, [1 << i for i in range(8)])
    assert dual_code(full).dim == 0


def test_rm1_subcode_weights():
    for k in range(1, 6):
        c = rm1_subcode(k)
        assert c.dim == k
        enum = c.weight_enumerator()
        assert enum[0] == 1 and enum[16] == 1
        assert enum[8] == 2**k - 2
        assert sum(enum) == 2**k


def test_rm1_subcode_nested():
    for k in range(1, 5):
        small, big = rm1_subcode(k), rm1_subcode(k + 1)
        for r in small.rows:
            assert big.contains(r)


def test_aut_hamming8_order_1344_vs_brute_force():
    h8 = hamming_code(8)
    gens, order = code_automorphisms(h8)
    assert order == 1344
    brute = brute_force_perms(h8.word_tuples(), 8)
    assert len(brute) == 1344
    for sigma in gens:
        assert sigma in set(brute)


def test_aut_rm1_extremes():
    gens, order = code_automorphisms(rm1_subcode(1))
    assert order == math.factorial(16)
    _, order5 = code_automorphisms(rm1_subcode(5))
    assert order5 == 322560  # = |AGL(4,2)|


def test_aut_closure_random_products():
    h8 = hamming_code(8)
    gens, _ = code_automorphisms(h8)
    words = set(h8.words())
    rng = random.Random(22)
    for _ in range(100):
        a = rng.choice(gens)
        b = rng.choice(gens)
        prod = tuple(b[a[p]] for p in range(8))
        for w in words:
            img = 0
            for i in range(8):
                if (w >> i) & 1:
                    img |= 1 << prod[i]
            assert img in words


def test_marking_count():
    assert len(all_markings(8)) == 105  # 7!!
    assert len(all_markings(4)) == 3
    assert len(set(all_markings(8))) == 105


def test_classify_markings_h8():
    orbits, aut_order = classify_markings(hamming_code(8))
    assert aut_order == 1344
    assert len(orbits) == 3
    assert sum(size for _, size in orbits) == 105
    for _, size in orbits:
        assert 1344 % size == 0


def test_classify_markings_h8_vs_brute_force():
    h8 = hamming_code(8)
    sigmas = brute_force_perms(h8.word_tuples(), 8)
    todo = set(all_markings(8))
    brute_orbits = []
    while todo:
        rep = next(iter(todo))
        orbit = {rep.permuted(s) for s in sigmas}
        assert rep in orbit
        todo -= orbit
        brute_orbits.append(orbit)
    fast, _ = classify_markings(h8)
    assert sorted(len(o) for o in brute_orbits) == sorted(s for _, s in fast)


def test_classify_markings_zero_code_len2():
    zero = BinaryCode.from_rows(2, [])
    orbits, order = classify_markings(zero)
    assert order == 2
    assert orbits == [(Marking.from_pairs(((0, 1),)), 1)]
