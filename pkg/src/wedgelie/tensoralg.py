"""Exact tensor-algebra arithmetic used to check the basis.

The rational Pontryagin algebra of the loop space of a wedge is the free
associative algebra on the generators; a bracket tree maps to its iterated
graded commutator there.  Everything is exact (``fractions.Fraction``).

Sign convention: moving an element of degree p past one of degree q costs
(-1)^(p*q).  This single rule fixes both the graded commutator and the
coproduct, with letters primitive.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Optional

from .alphabet import Alphabet, Generator
from .basis import BasicProduct
from .errors import (
    AlphabetMismatch,
    InhomogeneousInput,
    InvalidArgument,
    MixedDegreeInput,
)

Word = tuple  # tuple[Generator, ...]


def word_degree(word: Word) -> int:
    return sum(g.samelson_degree for g in word)


def word_key(word: Word) -> tuple:
    return tuple(g.position for g in word)


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


class NCPoly:
    """A noncommutative polynomial: a finite map word -> nonzero rational."""

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms: Optional[Mapping[Word, object]] = None, alphabet: Optional[Alphabet] = None):
        self.terms = _clean(terms or {})
        self.alphabet = alphabet

    @classmethod
    def unit(cls, alphabet=None) -> "NCPoly":
        return cls({(): 1}, alphabet)

    @classmethod
    def letter(cls, g: Generator, alphabet=None) -> "NCPoly":
        return cls({(g,): 1}, alphabet)

    @classmethod
    def word(cls, letters: Iterable[Generator], coeff=1, alphabet=None) -> "NCPoly":
        return cls({tuple(letters): coeff}, alphabet)

    def _merge_alphabet(self, other: "NCPoly"):
        a, b = self.alphabet, other.alphabet
        if a is not None and b is not None and a != b:
            raise AlphabetMismatch("polynomials live over different alphabets")
        return a if a is not None else b

    def __add__(self, other: "NCPoly") -> "NCPoly":
        alphabet = self._merge_alphabet(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NCPoly(terms, alphabet)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        return NCPoly({w: c * v for w, v in self.terms.items()}, self.alphabet)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"NCPoly({self.to_text()})"

    def degrees(self) -> set:
        return {word_degree(w) for w in self.terms}

    @property
    def degree(self) -> Optional[int]:
        """Common degree of all words, or None for zero / inhomogeneous."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), word_key(kv[0])))

    def to_text(self) -> str:
        """Canonical text: ``c1*l1.l2 + c2*l3`` with the unit word written ``1``."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            letters = ".".join(g.label for g in w) if w else "1"
            parts.append(f"{c}*{letters}")
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet) -> "NCPoly":
        text = text.strip()
        if text == "0":
            return cls({}, alphabet)
        terms: dict = {}
        for part in re.split(r"\s\+\s", text):
            coeff, _, letters = part.strip().partition("*")
            if not letters:
                raise InvalidArgument(f"bad term {part!r}")
            w = () if letters == "1" else tuple(alphabet[s] for s in letters.split("."))
            terms[w] = terms.get(w, 0) + Fraction(coeff)
        return cls(terms, alphabet)


def multiply(p: NCPoly, q: NCPoly) -> NCPoly:
    """Concatenation product, extended bilinearly."""
    alphabet = p._merge_alphabet(q)
    out: dict = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + a * b
    return NCPoly(out, alphabet)


def _homogeneous_degree(p: NCPoly) -> int:
    degs = p.degrees()
    if len(degs) > 1:
        raise InhomogeneousInput(f"{p.to_text()} is not homogeneous")
    return degs.pop() if degs else 0


def graded_commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    """pq - (-1)^{|p||q|} qp for homogeneous p, q (zero counts as homogeneous)."""
    dp, dq = _homogeneous_degree(p), _homogeneous_degree(q)
    sign = -1 if (dp * dq) % 2 else 1
    return multiply(p, q) - multiply(q, p).scale(sign)


def expand(bp: BasicProduct, alphabet: Optional[Alphabet] = None) -> NCPoly:
    """Image of a bracket tree in the tensor algebra (iterated graded commutator)."""
    cache: dict = {}

    def go(node):
        hit = cache.get(node)
        if hit is not None:
            return hit
        if node.is_leaf:
            val = NCPoly.letter(node.generator, alphabet)
        else:
            val = graded_commutator(go(node.left), go(node.right))
        cache[node] = val
        return val

    return go(bp)


class TwoSidedTensor:
    """An element of T(V) (x) T(V): map (left word, right word) -> rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self.terms = _clean(terms or {})

    def __add__(self, other: "TwoSidedTensor") -> "TwoSidedTensor":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TwoSidedTensor(terms)

    def __sub__(self, other: "TwoSidedTensor") -> "TwoSidedTensor":
        return self + TwoSidedTensor({k: -c for k, c in other.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoSidedTensor) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in sorted(self.terms.items(), key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1]))):
            ls = ".".join(g.label for g in l) or "1"
            rs = ".".join(g.label for g in r) or "1"
            parts.append(f"{c}*{ls}|{rs}")
        return " + ".join(parts)

    @classmethod
    def simple(cls, p: NCPoly, q: NCPoly) -> "TwoSidedTensor":
        """p (x) q."""
        return cls({(u, v): a * b for u, a in p.terms.items() for v, b in q.terms.items()})


def coproduct_word(word: Word) -> dict:
    """Delta of a single word as a dict (left, right) -> sign.

    Each letter goes left or right; sending a letter left past the letters
    already on the right costs (-1)^{|letter| * |right|}.
    """
    acc = {((), ()): 1}
    for g in word:
        d = g.samelson_degree
        nxt: dict = {}
        for (l, r), c in acc.items():
            s = -1 if (d * word_degree(r)) % 2 else 1
            key = (l + (g,), r)
            nxt[key] = nxt.get(key, 0) + s * c
            key = (l, r + (g,))
            nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return acc


def coproduct(p: NCPoly) -> TwoSidedTensor:
    out: dict = {}
    for w, c in p.terms.items():
        for k, s in coproduct_word(w).items():
            out[k] = out.get(k, 0) + s * c
    return TwoSidedTensor(out)


def is_primitive(p: NCPoly) -> bool:
    unit = NCPoly.unit()
    return coproduct(p) == TwoSidedTensor.simple(p, unit) + TwoSidedTensor.simple(unit, p)


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            row_r, row_i = m[rank], m[i]
            m[i] = [(p * row_i[j] - f * row_r[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def coefficient_matrix(polys: list[NCPoly]) -> tuple[list[Word], list[list[Fraction]]]:
    """Rows = polys, columns = every word that occurs, in lexicographic order."""
    words = sorted({w for p in polys for w in p.terms}, key=word_key)
    return words, [[p.terms.get(w, Fraction(0)) for w in words] for p in polys]


def span_rank(polys: list[NCPoly]) -> int:
    """Dimension of the rational span of homogeneous polys of one degree."""
    degs = set()
    for p in polys:
        if not p.is_homogeneous():
            raise MixedDegreeInput(f"{p.to_text()} is not homogeneous")
        degs |= p.degrees()
    if len(degs) > 1:
        raise MixedDegreeInput(f"polynomials span degrees {sorted(degs)}")
    _, rows = coefficient_matrix(polys)
    int_rows = []
    for row in rows:
        den = lcm(*(c.denominator for c in row)) if row else 1
        int_rows.append([int(c * den) for c in row])
    return bareiss_rank(int_rows)
