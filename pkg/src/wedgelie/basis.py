"""Basic Whitehead products (a Hall basis) over an alphabet.

A product is a binary bracket tree whose leaves are generators.  It is basic
when, recursively, every bracket ``[A, B]`` has ``A < B`` and, if ``B`` is
itself ``[C, D]``, ``C <= A``.  The order on products compares weight first.
Equal-weight products are ordered by height, then by left subtree, then by
right subtree; leaves follow the alphabet.
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections import Counter
from typing import Any, Callable, Iterable, Optional

from .alphabet import Alphabet, Family, Generator
from .errors import CutoffExceeded, InvalidArgument, UnsupportedAlphabet, WeightOneInput

LEAF = "LEAF"
PURE_X = "PURE_X"
PURE_Y = "PURE_Y"
HYBRID = "HYBRID"


class BasicProduct:
    """An immutable bracket tree with cached weight, degree and multidegree.

    Instances are built with :meth:`leaf` and :meth:`bracket`; the name is
    historical, trees that fail the Hall condition can still be represented
    (see :func:`is_basic`).
    """

    __slots__ = ("generator", "left", "right", "weight", "samelson_degree", "_counts", "key")

    def __init__(self, generator=None, left=None, right=None):
        self.generator = generator
        self.left = left
        self.right = right
        if generator is not None:
            self.weight = 1
            self.samelson_degree = generator.samelson_degree
            self._counts = ((generator, 1),)
            self.key = (1, generator.position)
        else:
            self.weight = left.weight + right.weight
            self.samelson_degree = left.samelson_degree + right.samelson_degree
            merged = Counter(dict(left._counts))
            merged.update(dict(right._counts))
            self._counts = tuple(sorted(merged.items(), key=lambda kv: kv[0].position))
            self.key = (self.weight, self.samelson_degree, left.key, right.key)

    @classmethod
    def leaf(cls, g: Generator) -> "BasicProduct":
        return cls(generator=g)

    @classmethod
    def bracket(cls, a: "BasicProduct", b: "BasicProduct") -> "BasicProduct":
        return cls(left=a, right=b)

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None

    @property
    def height(self) -> int:
        return self.samelson_degree + 1

    @property
    def whitehead_degree(self) -> int:
        return self.samelson_degree + 1

    @property
    def multidegree(self) -> dict[Generator, int]:
        return dict(self._counts)

    def leaves(self) -> Iterable[Generator]:
        if self.is_leaf:
            yield self.generator
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def __eq__(self, other) -> bool:
        return isinstance(other, BasicProduct) and self.key == other.key

    def __lt__(self, other: "BasicProduct") -> bool:
        return self.key < other.key

    def __le__(self, other: "BasicProduct") -> bool:
        return self.key <= other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return render_whitehead(self)


def height(bp: BasicProduct) -> int:
    """Sum of l_j (n_j - 1) over the leaves, plus one."""
    return sum(count * (g.whitehead_degree - 1) for g, count in bp.multidegree.items()) + 1


def is_basic(tree: BasicProduct) -> bool:
    if tree.is_leaf:
        return True
    a, b = tree.left, tree.right
    if not (is_basic(a) and is_basic(b)) or not a < b:
        return False
    return b.is_leaf or b.left <= a


def _hall_ok(a: BasicProduct, b: BasicProduct, rank: dict) -> bool:
    # a and b are already basic; ranks come from the enumeration order
    if rank[a] >= rank[b]:
        return False
    return b.is_leaf or rank[b.left] <= rank[a]


def enumerate_basic_products(
    alphabet: Alphabet,
    max_height: int,
    *,
    max_weight: Optional[int] = None,
    tie_break: Optional[Callable[[BasicProduct], Any]] = None,
) -> list[BasicProduct]:
    """All basic products of height <= ``max_height``, in basis order.

    ``tie_break`` replaces the default ordering among products of equal
    weight (weight still dominates).  The basis depends on this choice but
    its size per multidegree does not.
    """
    if not alphabet.covers(max_height - 1):
        raise CutoffExceeded(
            f"height {max_height} needs generators up to degree {max_height - 1}, "
            f"alphabet is truncated at {alphabet.truncation_degree}"
        )
    if max_weight is not None and max_weight < 1:
        raise InvalidArgument("max_weight must be positive")
    max_deg = max_height - 1
    sort_key = tie_break or (lambda p: p.key)

    leaves = [BasicProduct.leaf(g) for g in alphabet if g.samelson_degree <= max_deg]
    by_weight: dict[int, list[BasicProduct]] = {1: leaves}
    rank = {p: i for i, p in enumerate(leaves)}
    result = list(leaves)
    if not leaves:
        return result

    top_weight = max_deg // alphabet.min_degree
    if max_weight is not None:
        top_weight = min(top_weight, max_weight)
    for n in range(2, top_weight + 1):
        found = []
        for alpha in range(1, n // 2 + 1):
            beta = n - alpha
            for a in by_weight[alpha]:
                room = max_deg - a.samelson_degree
                for b in by_weight[beta]:
                    if b.samelson_degree <= room and _hall_ok(a, b, rank):
                        found.append(BasicProduct.bracket(a, b))
        found.sort(key=sort_key)
        for p in found:
            rank[p] = len(rank)
        by_weight[n] = found
        result.extend(found)
    return result


def classify(bp: BasicProduct) -> str:
    families = {g.family for g in bp.leaves()}
    if Family.SPHERE in families:
        raise UnsupportedAlphabet("pure/hybrid classification needs an x/y alphabet")
    if bp.is_leaf:
        return LEAF
    if families == {Family.X}:
        return PURE_X
    if families == {Family.Y}:
        return PURE_Y
    return HYBRID


def render_whitehead(bp: BasicProduct, unicode: bool = False) -> str:
    if bp.is_leaf:
        return bp.generator.display(unicode)
    return f"[{render_whitehead(bp.left, unicode)}, {render_whitehead(bp.right, unicode)}]"


def render_commutator(bp: BasicProduct, unicode: bool = False) -> str:
    """The iterated commutator of self-maps matching ``bp``: x -> phi, y -> psi."""
    if bp.is_leaf:
        g = bp.generator
        if g.family is Family.SPHERE:
            raise UnsupportedAlphabet("commutator labels are defined for x/y alphabets only")
        if unicode:
            name = "φ" if g.family is Family.X else "ψ"
        else:
            name = "phi" if g.family is Family.X else "psi"
        return f"{name}_{g.index}"
    return f"[{render_commutator(bp.left, unicode)}, {render_commutator(bp.right, unicode)}]_c"


def vanishing_skeleton_dim(bp: BasicProduct, a: int) -> int:
    """Skeleton of the suspension on which the matching iterated commutator is null.

    With s the indices of the leaves and l the weight: pure x products give
    2a*sum(s), pure y products 2a*sum(s) + l, and hybrids with t x-leaves
    give 2a*sum(s) + l - t.
    """
    if bp.is_leaf:
        raise WeightOneInput("vanishing skeleton is defined for brackets only")
    kind = classify(bp)
    leaves = list(bp.leaves())
    base = 2 * a * sum(g.index for g in leaves)
    l = len(leaves)
    if kind == PURE_X:
        return base
    if kind == PURE_Y:
        return base + l
    t = sum(1 for g in leaves if g.family is Family.X)
    return base + l - t


_TOKEN = re.compile(r"\s*(\[|\]|,|[^\s\[\],]+)")


def parse_product(text: str, alphabet: Alphabet) -> BasicProduct:
    """Parse bracket notation such as ``"[x1, [x1, y1]]"``."""
    tokens = [t for t in _TOKEN.findall(text) if t.strip()]
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidArgument(f"unexpected end of {text!r}")
        pos += 1
        return tokens[pos - 1]

    def expect(tok):
        got = take()
        if got != tok:
            raise InvalidArgument(f"expected {tok!r}, got {got!r} in {text!r}")

    def node():
        tok = take()
        if tok == "[":
            left = node()
            expect(",")
            right = node()
            expect("]")
            return BasicProduct.bracket(left, right)
        return BasicProduct.leaf(alphabet[tok])

    tree = node()
    if pos != len(tokens):
        raise InvalidArgument(f"trailing input in {text!r}")
    return tree


def product_record(bp: BasicProduct, unicode: bool = False) -> dict:
    try:
        commutator = render_commutator(bp, unicode)
        kind = classify(bp)
    except UnsupportedAlphabet:
        commutator, kind = None, LEAF if bp.is_leaf else "BRACKET"
    return {
        "whitehead": render_whitehead(bp, unicode),
        "commutator": commutator,
        "weight": bp.weight,
        "height": bp.height,
        "class": kind,
        "multidegree": {g.label: c for g, c in bp.multidegree.items()},
    }


def basis_to_jsonl(products: Iterable[BasicProduct], unicode: bool = False) -> str:
    return "".join(
        json.dumps(product_record(p, unicode), ensure_ascii=False) + "\n" for p in products
    )


def basis_to_csv(products: Iterable[BasicProduct], unicode: bool = False) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["whitehead", "commutator", "weight", "height", "class", "multidegree"])
    for p in products:
        rec = product_record(p, unicode)
        md = " ".join(f"{k}^{v}" for k, v in rec["multidegree"].items())
        writer.writerow(
            [rec["whitehead"], rec["commutator"] or "", rec["weight"], rec["height"], rec["class"], md]
        )
    return out.getvalue()
