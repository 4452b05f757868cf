"""Independent oracles for cross-checking the library.

Everything in this module is deliberately naive and self-contained: nothing
here imports from ``jumploci``.  Expected values frozen into the test suite
were produced by these functions (or by hand, where noted in the tests), so
that the library and its reference results cannot share a bug.

Conventions match the library's *inputs* only: vectors are tuples of
``Fraction``, matrices are sequences of such rows, free-group letters are
``(generator_index >= 1, sign)`` pairs.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction

TAU = 2 * math.pi


# ---------------------------------------------------------------------------
# naive exact linear algebra (row operations only, no canonical forms)
# ---------------------------------------------------------------------------

def frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def naive_rank(rows):
    """Rank over Q by plain Gaussian elimination."""
    m = [row[:] for row in frac_rows(rows)]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def naive_nullspace(rows, n):
    """Basis (list of length-n Fraction rows) of {x : rows @ x = 0} over Q."""
    m = [row[:] for row in frac_rows(rows)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def span_contains(big_rows, small_rows):
    """Is span(small) a subset of span(big)?  (Over Q.)"""
    big = frac_rows(big_rows)
    r = naive_rank(big)
    for row in frac_rows(small_rows):
        if naive_rank(big + [row]) != r:
            return False
    return True


def spans_equal(a_rows, b_rows):
    return span_contains(a_rows, b_rows) and span_contains(b_rows, a_rows)


def naive_det(rows):
    """Determinant over Q by cofactor expansion (tiny matrices only)."""
    k = len(rows)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(k):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * naive_det(minor)
    return total


def naive_solve(a_rows, b):
    """One rational solution x of A x = b, or None (A square or not)."""
    m = [row[:] + [bv] for row, bv in zip(frac_rows(a_rows), [Fraction(x) for x in b])]
    n = len(a_rows[0]) if a_rows else 0
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [p - f * q for p, q in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(m)):
        if m[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = m[i][n]
    return x


# ---------------------------------------------------------------------------
# determinantal divisors: invariant factors / integer linear systems
# ---------------------------------------------------------------------------

def _int_minors_gcd(rows, k):
    """gcd of absolute values of all k x k minors of an integer matrix."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if k == 0:
        return 1
    if k > min(m, n):
        return 0
    g = 0
    for rsel in itertools.combinations(range(m), k):
        for csel in itertools.combinations(range(n), k):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            d = naive_det(sub)
            assert d.denominator == 1
            g = math.gcd(g, abs(int(d)))
    return g


def oracle_invariant_factors(rows):
    """Nonzero invariant factors of an integer matrix, via d_k/d_{k-1}."""
    rows = [[int(x) for x in row] for row in rows]
    r = naive_rank(rows)
    factors = []
    prev = 1
    for k in range(1, r + 1):
        dk = _int_minors_gcd(rows, k)
        factors.append(dk // prev)
        prev = dk
    return factors


def oracle_integer_system_solvable(a_rows, b):
    """Does A x = b (A, b integral) admit an *integer* solution?

    Classical determinantal-divisor criterion: ranks agree over Q and
    d_k(A) = d_k([A|b]) for every k up to the rank.
    """
    a_rows = [[int(x) for x in row] for row in a_rows]
    b = [int(x) for x in b]
    aug = [row + [bv] for row, bv in zip(a_rows, b)]
    r = naive_rank(a_rows)
    if naive_rank(aug) != r:
        return False
    for k in range(1, r + 1):
        if _int_minors_gcd(a_rows, k) != _int_minors_gcd(aug, k):
            return False
    return True


def oracle_lattice_membership(lam, basis_rows, n):
    """Is lam in span_Q(basis) + Z^n ?

    Reduces to an integer linear system W m = W lam for an integral matrix W
    with row span equal to the perp of the basis span, then applies the
    determinantal-divisor solvability criterion.  Independent of any Hermite
    normal form code.
    """
    lam = [Fraction(x) for x in lam]
    basis = frac_rows(basis_rows)
    perp = naive_nullspace(basis, n) if basis else [
        [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    if not perp:
        return True  # the span is everything
    w_rows = []
    for row in perp:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        w_rows.append([int(x * den) for x in row])
    b = []
    for row in w_rows:
        val = sum(Fraction(c) * l for c, l in zip(row, lam))
        if val.denominator != 1:
            return False
        b.append(int(val))
    return oracle_integer_system_solvable(w_rows, b)


# ---------------------------------------------------------------------------
# set partitions and exponential tangent cones
# ---------------------------------------------------------------------------

def set_partitions(items):
    """All partitions of a list (Bell-number many)."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def oracle_tangent_cone(terms, n):
    """Maximal subspaces L(p) over admissible partitions, by brute force.

    ``terms`` is a dict mapping integer exponent tuples to nonzero rational
    coefficients.  Returns a list of basis-row lists (one per maximal
    subspace, unordered, non-canonical); empty list means the cone is empty.
    """
    support = sorted(terms)
    if sum(terms.values()) != 0:
        return []
    spans = []
    for part in set_partitions(support):
        if any(sum(terms[a] for a in block) != 0 for block in part):
            continue
        constraints = []
        for block in part:
            base = block[0]
            for other in block[1:]:
                constraints.append([Fraction(x - y) for x, y in zip(other, base)])
        basis = naive_nullspace(constraints, n)
        spans.append(basis)
    maximal = []
    for cand in spans:
        if any(span_contains(other, cand) and not spans_equal(other, cand)
               for other in spans):
            continue
        if any(spans_equal(kept, cand) for kept in maximal):
            continue
        maximal.append(cand)
    return maximal


# ---------------------------------------------------------------------------
# free calculus on words, letter by letter
# ---------------------------------------------------------------------------

def oracle_fox_derivative(letters, j, projection):
    """Abelianized Fox derivative d w / d x_j as {exponent tuple: int}.

    ``letters``: list of (generator >= 1, +-1); ``projection``: q x n integer
    matrix sending generator exponent columns to free-abelianization
    exponents.  Left convention: d(uv) = du + ab(u) dv.
    """
    q = len(projection)
    n = len(projection[0]) if q else 0
    prefix = [0] * q
    out: dict[tuple, int] = {}

    def add(sign, expvec):
        key = tuple(sum(projection[g][k] * expvec[g] for g in range(q)) for k in range(n))
        out[key] = out.get(key, 0) + sign
        if out[key] == 0:
            del out[key]

    for g, s in letters:
        gi = g - 1
        if s == 1:
            if g == j:
                add(+1, prefix)
            prefix[gi] += 1
        else:
            prefix[gi] -= 1
            if g == j:
                add(-1, prefix)
    return out


def word_letters(syllables):
    """Expand ((gen, exp), ...) syllables into single letters."""
    letters = []
    for g, e in syllables:
        s = 1 if e > 0 else -1
        letters.extend([(g, s)] * abs(e))
    return letters


# ---------------------------------------------------------------------------
# Grassmann-Pluecker exchange relations
# ---------------------------------------------------------------------------

def signed_lookup(coords, subset_index, indices):
    """p_{indices} with sign of sorting; 0 on repeated indices."""
    if len(set(indices)) != len(indices):
        return Fraction(0)
    perm = sorted(range(len(indices)), key=lambda i: indices[i])
    inversions = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    key = tuple(sorted(indices))
    val = coords[subset_index[key]]
    return -val if inversions % 2 else val


def plucker_relation_residuals(coords, r, n):
    """All one-term exchange relation values; zero vector iff decomposable.

    coords: sequence indexed by r-subsets of range(n) in lexicographic order.
    """
    subsets = list(itertools.combinations(range(n), r))
    index = {s: i for i, s in enumerate(subsets)}
    residuals = []
    for left in itertools.combinations(range(n), r - 1):
        for right in itertools.combinations(range(n), r + 1):
            total = Fraction(0)
            for k, jk in enumerate(right):
                sign = -1 if k % 2 else 1
                a = signed_lookup(coords, index, left + (jk,))
                rest = right[:k] + right[k + 1:]
                b = signed_lookup(coords, index, rest)
                total += sign * a * b
            residuals.append(total)
    return residuals


# ---------------------------------------------------------------------------
# numerics (sanity checks only)
# ---------------------------------------------------------------------------

def unit_root(q):
    """exp(2 pi i q) for rational q."""
    q = Fraction(q)
    return cmath.exp(1j * TAU * float(q))


def eval_laurent_complex(terms, point):
    """Evaluate {exponents: Fraction} at a tuple of nonzero complex numbers."""
    total = 0j
    for exps, coeff in terms.items():
        val = complex(coeff)
        for e, t in zip(exps, point):
            val *= t ** e
        total += val
    return total


def complex_rank(rows, tol=1e-9):
    """Rank of a complex matrix by Gaussian elimination with pivot threshold."""
    m = [list(map(complex, row)) for row in rows]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv, best = None, tol
        for i in range(rank, len(m)):
            if abs(m[i][col]) > best:
                piv, best = i, abs(m[i][col])
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and abs(m[i][col]) > tol:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def minor_rank(entries, add, mul, neg, is_zero, zero, one):
    """Rank as the largest k with a nonvanishing k x k minor.

    Generic over a commutative ring given by callables; used as the second
    code path for rank computations over cyclotomic fields.
    """
    m = len(entries)
    n = len(entries[0]) if m else 0

    def det(rsel, csel):
        if not rsel:
            return one
        r0 = rsel[0]
        total = zero
        for pos, c in enumerate(csel):
            a = entries[r0][c]
            if is_zero(a):
                continue
            sub = det(rsel[1:], csel[:pos] + csel[pos + 1:])
            term = mul(a, sub)
            total = add(total, neg(term) if pos % 2 else term)
        return total

    for k in range(min(m, n), 0, -1):
        for rsel in itertools.combinations(range(m), k):
            for csel in itertools.combinations(range(n), k):
                if not is_zero(det(list(rsel), list(csel))):
                    return k
    return 0
