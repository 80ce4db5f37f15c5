"""Bit-packed linear algebra over GF(2).

Vectors are plain Python ints (bit i = coordinate i) and matrices are
sequences of row ints; there are no wrapper classes, so callers must keep
track of widths themselves.  All routines are pure.
"""

from itertools import combinations

__all__ = [
    "f2_echelon",
    "f2_rank",
    "f2_rref",
    "f2_reduce",
    "f2_in_span",
    "f2_span",
    "f2_kernel",
    "f2_mat_mul",
    "f2_vec_mat",
    "f2_mat_inverse",
    "f2_identity",
    "f2_transpose",
    "f2_subspaces",
]


def f2_echelon(rows):
    """Row-echelon basis (descending leading bits) of the span of `rows`."""
    basis = []  # kept sorted by leading bit, descending
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return basis


def f2_reduce(v, basis):
    """Reduce v against an echelon basis; 0 iff v lies in the span."""
    for b in basis:
        v = min(v, v ^ b)
    return v


def f2_rank(rows):
    return len(f2_echelon(rows))


def f2_rref(rows):
    """Canonical reduced row-echelon form (tuple, descending pivots).

    Unique per subspace, so it doubles as a dictionary key for subspaces.
    """
    basis = f2_echelon(rows)
    # eliminate pivots of later rows from earlier rows
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            pivot = 1 << (basis[j].bit_length() - 1)
            if basis[i] & pivot:
                basis[i] ^= basis[j]
    return tuple(basis)


def f2_in_span(v, rows):
    return f2_reduce(v, f2_echelon(rows)) == 0


def f2_span(rows):
    """All 2^rank elements of the span (list, starts with 0)."""
    out = [0]
    for b in f2_echelon(rows):
        out += [v ^ b for v in out]
    return out


def f2_kernel(rows, width):
    """Basis of {v in F2^width : sum over set bits i of v of rows[i] = 0}.

    I.e. the left kernel of the matrix whose i-th row is rows[i].
    """
    rows = list(rows)
    n = len(rows)
    # track combinations: augment each row with an identity tag
    tagged = [(rows[i], 1 << i) for i in range(n)]
    basis = []  # echelon over the row part
    kernel = []
    for r, tag in tagged:
        for br, btag in basis:
            if min(r, r ^ br) != r:
                r ^= br
                tag ^= btag
        if r:
            basis.append((r, tag))
            basis.sort(key=lambda p: -p[0])
        else:
            kernel.append(tag)
    return kernel


def f2_identity(n):
    return [1 << i for i in range(n)]


def f2_vec_mat(v, rows):
    """Row vector times matrix: XOR of rows[i] over set bits i of v."""
    out = 0
    while v:
        i = (v & -v).bit_length() - 1
        out ^= rows[i]
        v &= v - 1
    return out


def f2_mat_mul(a_rows, b_rows):
    """Matrix product (row convention): row i of result = a_rows[i] * B."""
    return [f2_vec_mat(r, b_rows) for r in a_rows]


def f2_transpose(rows, width):
    out = []
    for j in range(width):
        c = 0
        for i, r in enumerate(rows):
            c |= ((r >> j) & 1) << i
        out.append(c)
    return out


def f2_mat_inverse(rows, n):
    """Inverse of an n x n bit matrix; raises ValueError if singular."""
    work = list(rows)
    inv = f2_identity(n)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for r in range(n):
            if r != col and ((work[r] >> col) & 1):
                work[r] ^= work[col]
                inv[r] ^= inv[col]
    return inv


def f2_subspaces(width, dim):
    """Yield every dim-dimensional subspace of F2^width exactly once.

    Subspaces come out as RREF tuples (descending pivots).  Enumeration is
    by choice of pivot columns plus free entries, so the count matches the
    Gaussian binomial coefficient.
    """
    if dim == 0:
        yield ()
        return
    for pivots in combinations(range(width - 1, -1, -1), dim):
        # pivots descending; row i has leading bit pivots[i]
        free_positions = []  # (row, col) pairs that may be 0/1
        for i, p in enumerate(pivots):
            for col in range(p - 1, -1, -1):
                if col not in pivots:
                    free_positions.append((i, col))
        base = [1 << p for p in pivots]
        nfree = len(free_positions)
        for mask in range(1 << nfree):
            rows = list(base)
            m = mask
            while m:
                idx = (m & -m).bit_length() - 1
                i, col = free_positions[idx]
                rows[i] |= 1 << col
                m &= m - 1
            yield tuple(rows)
