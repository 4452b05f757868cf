"""Finitely presented groups and Fox free differential calculus.

A presentation ``<x1,...,xq | r1,...,rm>`` determines:

* the abelianization Z^q / (row lattice of the relator exponent matrix),
  split by Smith normal form into a free part Z^n and torsion invariants;
* the m x q Alexander matrix whose (i, j) entry is the image of the left
  Fox derivative d(r_i)/d(x_j) under the torsion-free abelianization
  alpha : G -> Z^n, a Laurent polynomial in n variables.

Depth-one jump-locus membership of a character rho = exp(2 pi i lambda) is
the determinantal condition

    rank d2(rho) + rank d1(rho) <= q - 1,

where d2 is the Alexander matrix and d1 is the column with entries
rho(x_j) - 1.  Ranks at torsion characters are exact cyclotomic Gaussian
elimination; generic ranks along a translated subtorus restrict the entries
to the coset first and then run fraction-free elimination.

>>> P = parse_presentation("<x1,x2 | x1 x2^2 x1^-1 x2^-2>")
>>> alexander_matrix(P).entries[0][0].to_text()
'1 - t2^2'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .laurent import (CyclotomicNumber, LaurentPoly, bareiss_rank,
                      evaluate_at_character, restrict_to_translated_torus)
from .qlinalg import snf, vec
from .tori import TorsionCharacter, TranslatedTorus


# ---------------------------------------------------------------------------
# free words
# ---------------------------------------------------------------------------

class FreeWord:
    """A freely reduced word in syllable form: ((gen_index, exponent), ...).

    Generator indices are zero-based; exponents are nonzero; adjacent
    syllables use distinct generators.

    >>> w = FreeWord.generator(0) * FreeWord.generator(1) ** 2
    >>> (w * w.inverse()).is_identity()
    True
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        reduced: list[list[int]] = []
        for g, e in syllables:
            g, e = int(g), int(e)
            if e == 0:
                continue
            if reduced and reduced[-1][0] == g:
                reduced[-1][1] += e
                if reduced[-1][1] == 0:
                    reduced.pop()
            else:
                reduced.append([g, e])
        self.syllables = tuple((g, e) for g, e in reduced)

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls(())

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "FreeWord":
        return cls(((index, exponent),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.syllables + other.syllables)

    def __pow__(self, k: int) -> "FreeWord":
        if k == 0:
            return FreeWord.identity()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def conjugate_by(self, w: "FreeWord") -> "FreeWord":
        """self^w = w^-1 self w."""
        return w.inverse() * self * w

    def is_identity(self) -> bool:
        return not self.syllables

    def letters(self) -> list[tuple[int, int]]:
        """Expanded (generator, +-1) letters, for cross-checking."""
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def exponent_vector(self, num_generators: int) -> tuple[int, ...]:
        v = [0] * num_generators
        for g, e in self.syllables:
            v[g] += e
        return tuple(v)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def to_text(self, names: Sequence[str]) -> str:
        if not self.syllables:
            return "1"
        return " ".join(
            names[g] + (f"^{e}" if e != 1 else "") for g, e in self.syllables)

    def __repr__(self):
        return f"FreeWord({self.syllables})"


@dataclass(frozen=True)
class Presentation:
    """Generators (named, order fixes matrix columns) and relators."""
    generator_names: tuple[str, ...]
    relators: tuple[FreeWord, ...]

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def to_text(self) -> str:
        gens = ",".join(self.generator_names)
        rels = ", ".join(r.to_text(self.generator_names) for r in self.relators)
        return f"<{gens} | {rels}>" if self.relators else f"<{gens}>"


# ---------------------------------------------------------------------------
# presentation parser
# ---------------------------------------------------------------------------

class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize_presentation(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "<>|,[]()^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch == "-" or ch.isdigit():
            j = i + 1 if ch == "-" else i
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise PresentationSyntaxError("expected digits after '-'", i)
            tokens.append(("int", int(text[i:k]), i))
            i = k
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PresentationSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


def parse_presentation(text: str) -> Presentation:
    """Parse ``<g1,g2,... | w1, w2, ...>``.

    Words are juxtaposed atoms.  An atom is a generator name, optionally
    followed by ``^`` and either an integer (power) or another atom
    (conjugation, ``u^w = w^-1 u w``); ``[u,v]`` is the commutator
    u v u^-1 v^-1 and ``(w)`` groups.  Whitespace is ignored.

    >>> parse_presentation("<a,b | [a,b]>").relators[0]
    FreeWord(((0, 1), (1, 1), (0, -1), (1, -1)))
    """
    tokens = _tokenize_presentation(text)
    pos = 0

    def peek():
        return tokens[pos]

    def expect(kind):
        nonlocal pos
        k, v, at = tokens[pos]
        if k != kind:
            raise PresentationSyntaxError(f"expected {kind!r}, found {k!r}", at)
        pos += 1
        return v

    expect("<")
    names = [expect("name")]
    while peek()[0] == ",":
        pos += 1
        names.append(expect("name"))
    if len(set(names)) != len(names):
        raise PresentationSyntaxError("duplicate generator name", tokens[0][2])
    index = {name: i for i, name in enumerate(names)}

    def parse_primary() -> FreeWord:
        nonlocal pos
        kind, value, at = peek()
        if kind == "name":
            pos += 1
            if value not in index:
                raise PresentationSyntaxError(f"unknown generator {value!r}", at)
            return FreeWord.generator(index[value])
        if kind == "[":
            pos += 1
            u = parse_word()
            expect(",")
            v = parse_word()
            expect("]")
            return u * v * u.inverse() * v.inverse()
        if kind == "(":
            pos += 1
            w = parse_word()
            expect(")")
            return w
        raise PresentationSyntaxError("expected a generator, '[' or '('", at)

    def parse_atom() -> FreeWord:
        nonlocal pos
        word = parse_primary()
        while peek()[0] == "^":
            pos += 1
            kind, value, at = peek()
            if kind == "int":
                pos += 1
                word = word ** value
            else:
                word = word.conjugate_by(parse_atom())
        return word

    def parse_word() -> FreeWord:
        word = parse_atom()
        while peek()[0] in ("name", "[", "("):
            word = word * parse_atom()
        return word

    relators: list[FreeWord] = []
    kind, _, at = peek()
    if kind == "|":
        pos += 1
        if peek()[0] not in (">",):
            relators.append(parse_word())
            while peek()[0] == ",":
                pos += 1
                relators.append(parse_word())
    expect(">")
    expect("end")
    return Presentation(tuple(names), tuple(relators))


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Abelianization:
    """The torsion-free abelianization alpha : G ->> Z^n plus torsion data.

    ``projection`` is q x n: row j is alpha(x_j).  ``torsion_invariants``
    are the Smith invariant factors > 1 of the relator exponent matrix.
    """
    free_rank: int
    projection: tuple[tuple[int, ...], ...]
    torsion_invariants: tuple[int, ...]

    def generator_image(self, j: int) -> tuple[int, ...]:
        return self.projection[j]


def abelianize(P: Presentation) -> Abelianization:
    """Split G_ab by the Smith normal form of the relator exponent matrix.

    >>> abelianize(parse_presentation("<x | x^2>"))
    Abelianization(free_rank=0, projection=((),), torsion_invariants=(2,))
    """
    q = P.num_generators
    exponent_rows = [list(r.exponent_vector(q)) for r in P.relators]
    if not exponent_rows:
        exponent_rows = [[0] * q]
    s, _, v = snf(exponent_rows)
    diag = [s[i][i] for i in range(min(len(s), q)) if s[i][i] != 0]
    k = len(diag)
    projection = tuple(tuple(v[i][k:]) for i in range(q))
    torsion = tuple(d for d in diag if d > 1)
    return Abelianization(free_rank=q - k, projection=projection,
                          torsion_invariants=torsion)


# ---------------------------------------------------------------------------
# Fox derivatives and Alexander matrices
# ---------------------------------------------------------------------------

def fox_derivative_abelianized(w: FreeWord, j: int, ab: Abelianization
                               ) -> LaurentPoly:
    """alpha(dw/dx_j) with the left convention d(uv) = du + u . dv.

    On a syllable x_g^e with abelianized prefix p, the derivative
    contributes t^p (1 + t^{a_g} + ... + t^{(e-1) a_g}) when g = j and
    e > 0, and -t^p (t^{-a_g} + ... + t^{e a_g}) when e < 0.
    """
    n = ab.free_rank
    prefix = [0] * n
    terms: dict = {}

    def add(expo, sign):
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + sign

    for g, e in w.syllables:
        a = ab.projection[g]
        if g == j:
            if e > 0:
                for i in range(e):
                    add((prefix[t] + i * a[t] for t in range(n)), Fraction(1))
            else:
                for i in range(1, -e + 1):
                    add((prefix[t] - i * a[t] for t in range(n)), Fraction(-1))
        for t in range(n):
            prefix[t] += e * a[t]
    return LaurentPoly(n, terms)


class AlexanderMatrix:
    """m x q matrix of Laurent polynomials alpha(dr_i/dx_j) in n variables."""

    __slots__ = ("entries", "num_vars", "abelianization")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], num_vars: int,
                 abelianization: Abelianization):
        self.entries = tuple(tuple(row) for row in entries)
        self.num_vars = num_vars
        self.abelianization = abelianization

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return len(self.entries[0]) if self.entries else len(self.abelianization.projection)

    def fundamental_identity_holds(self) -> bool:
        """Sum_j entry(i,j) (t^{alpha(x_j)} - 1) = 0 for every row i."""
        n = self.num_vars
        for row in self.entries:
            total = LaurentPoly.zero(n)
            for j, entry in enumerate(row):
                a = self.abelianization.projection[j]
                factor = LaurentPoly.monomial(a, 1, n) - LaurentPoly.constant(n, 1)
                total = total + entry * factor
            if not total.is_zero():
                return False
        return True

    def to_json(self) -> dict:
        return {
            "rows": self.num_rows,
            "cols": self.num_cols,
            "num_vars": self.num_vars,
            "entries": [[e.to_json()["terms"] for e in row] for row in self.entries],
        }


def alexander_matrix(P: Presentation,
                     ab: Optional[Abelianization] = None) -> AlexanderMatrix:
    """Fox-derivative matrix of the presentation, abelianized.

    >>> M = alexander_matrix(parse_presentation("<x1,x2 | [x1,x2]>"))
    >>> [e.to_text() for e in M.entries[0]]
    ['1 - t2', '-1 + t1']
    """
    if ab is None:
        ab = abelianize(P)
    q = P.num_generators
    entries = [[fox_derivative_abelianized(r, j, ab) for j in range(q)]
               for r in P.relators]
    return AlexanderMatrix(entries, ab.free_rank, ab)


def generator_character_poly(ab: Abelianization, j: int) -> LaurentPoly:
    """t^{alpha(x_j)} - 1, the boundary-d1 entry for generator j."""
    n = ab.free_rank
    return LaurentPoly.monomial(ab.projection[j], 1, n) - LaurentPoly.constant(n, 1)


# ---------------------------------------------------------------------------
# exact ranks
# ---------------------------------------------------------------------------

def _cyclo_rank(rows: list[list[CyclotomicNumber]]) -> int:
    if not rows or not rows[0]:
        return 0
    work = [row[:] for row in rows]
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(work)):
            if not work[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [x * inv for x in work[rank]]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if not f.is_zero():
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_at_character(M: AlexanderMatrix, lam) -> int:
    """Exact rank of M(rho) over Q(zeta_m), rho = exp(2 pi i lam)."""
    lam = lam if isinstance(lam, TorsionCharacter) else TorsionCharacter(vec(lam))
    if len(lam.values) != M.num_vars:
        raise ValueError("character length mismatch")
    evaluated = [[evaluate_at_character(e, lam) for e in row]
                 for row in M.entries]
    return _cyclo_rank(evaluated)


def depth1_membership(P: Presentation, lam) -> bool:
    """Whether rho = exp(2 pi i lam) lies in the depth-one degree-one jump locus.

    Criterion: rank d2(rho) + rank d1(rho) <= q - 1, with d1(rho) the
    column (rho(x_j) - 1)_j.  At lam = 0 this reduces to b_1(G) >= 1.
    """
    ab = abelianize(P)
    lam = lam if isinstance(lam, TorsionCharacter) else TorsionCharacter(vec(lam))
    if len(lam.values) != ab.free_rank:
        raise ValueError("character length mismatch")
    M = alexander_matrix(P, ab)
    rank2 = rank_at_character(M, lam)
    rank1 = 0
    for j in range(P.num_generators):
        pairing = sum((Fraction(a) * x for a, x in
                       zip(ab.projection[j], lam.values)), Fraction(0))
        if pairing.denominator != 1:
            rank1 = 1
            break
    return rank2 + rank1 <= P.num_generators - 1


def generic_rank_on_torus(M: AlexanderMatrix, torus: TranslatedTorus) -> int:
    """Rank of M at a generic point of the coset rho exp(L otimes C).

    Entries are restricted to the coset (Laurent polynomials in dim L
    variables with cyclotomic coefficients) and eliminated fraction-free.
    """
    if torus.ambient_dim != M.num_vars:
        raise ValueError("torus ambient dimension mismatch")
    if not M.entries:
        return 0
    restricted = [[restrict_to_translated_torus(e, torus) for e in row]
                  for row in M.entries]
    return bareiss_rank(restricted)


def contains_translated_torus(P: Presentation, torus: TranslatedTorus) -> bool:
    """Generic containment of the coset in the degree-one jump locus.

    True iff generic rank d2 + generic rank d1 along the coset is at most
    q - 1.  Rank is upper-semicontinuous, so the generic verdict certifies
    every point of the (closed) coset.
    """
    ab = abelianize(P)
    if torus.ambient_dim != ab.free_rank:
        raise ValueError("torus ambient dimension mismatch")
    M = alexander_matrix(P, ab)
    rank2 = generic_rank_on_torus(M, torus)
    rank1 = 0
    for j in range(P.num_generators):
        poly = generator_character_poly(ab, j)
        if not restrict_to_translated_torus(poly, torus).is_zero():
            rank1 = 1
            break
    return rank2 + rank1 <= P.num_generators - 1
