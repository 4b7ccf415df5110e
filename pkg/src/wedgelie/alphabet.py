"""Weight-1 generators and their ordering.

Two kinds of alphabet are supported:

* the rational model of the suspended Eilenberg-MacLane wedge, with
  generators ``x_i`` (loop degree ``2ai``) and ``y_j`` (loop degree
  ``2aj + 1``) interleaved as ``x1 < y1 < x2 < y2 < ...``;
* a finite wedge of spheres ``S^{n_1} v ... v S^{n_k}`` with generators
  ``r1 < r2 < ... < rk`` in input order.

Degrees are tracked in the loop (Samelson) grading, which is additive under
brackets.  The Whitehead degree is always one more.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import ForeignGenerator, InvalidArgument


class Family(str, enum.Enum):
    X = "X"
    Y = "Y"
    SPHERE = "SPHERE"


class Parity(str, enum.Enum):
    EVEN = "EVEN"
    ODD = "ODD"


_PREFIX = {Family.X: "x", Family.Y: "y", Family.SPHERE: "r"}
_GLYPH = {Family.X: "χ", Family.Y: "η", Family.SPHERE: "ρ"}


@dataclass(frozen=True)
class Generator:
    """A weight-1 class.  ``position`` is its rank in the alphabet order."""

    label: str
    family: Family
    index: int
    samelson_degree: int
    position: int

    @property
    def whitehead_degree(self) -> int:
        return self.samelson_degree + 1

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.samelson_degree % 2 else Parity.EVEN

    @property
    def is_odd(self) -> bool:
        return self.samelson_degree % 2 == 1

    def display(self, unicode: bool = False) -> str:
        if unicode:
            return f"{_GLYPH[self.family]}{self.index}"
        return self.label

    def __repr__(self) -> str:
        return f"{self.label}:{self.samelson_degree}"


def _make(family: Family, index: int, degree: int, position: int) -> Generator:
    return Generator(f"{_PREFIX[family]}{index}", family, index, degree, position)


@dataclass(frozen=True)
class Alphabet:
    """An ordered, immutable list of generators.

    ``truncation_degree`` is the largest loop degree the alphabet is complete
    up to.  It is ``None`` for a finite wedge of spheres, which is never
    truncated.
    """

    generators: tuple[Generator, ...]
    truncation_degree: Optional[int] = None
    a: Optional[int] = None

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, key) -> Generator:
        if isinstance(key, str):
            try:
                return self._by_label[key]
            except KeyError:
                raise ForeignGenerator(f"no generator labelled {key!r}") from None
        return self.generators[key]

    def __contains__(self, g) -> bool:
        return isinstance(g, Generator) and self._by_label.get(g.label) == g

    @cached_property
    def _by_label(self) -> dict[str, Generator]:
        return {g.label: g for g in self.generators}

    @property
    def is_em_wedge(self) -> bool:
        return self.a is not None

    @property
    def min_degree(self) -> int:
        return min(g.samelson_degree for g in self.generators)

    def covers(self, samelson_degree: int) -> bool:
        """True if every generator of degree <= ``samelson_degree`` is present."""
        return self.truncation_degree is None or samelson_degree <= self.truncation_degree

    def compare(self, g: Generator, h: Generator) -> int:
        """Three-way comparison in the weight-1 order: -1, 0 or 1."""
        for k in (g, h):
            if k not in self:
                raise ForeignGenerator(f"{k!r} does not belong to this alphabet")
        return (g.position > h.position) - (g.position < h.position)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "cutoff": self.truncation_degree,
            "generators": [
                {
                    "label": g.label,
                    "family": g.family.value,
                    "index": g.index,
                    "samelson_degree": g.samelson_degree,
                }
                for g in self.generators
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Alphabet":
        gens = tuple(
            Generator(d["label"], Family(d["family"]), d["index"], d["samelson_degree"], pos)
            for pos, d in enumerate(data["generators"])
        )
        return cls(gens, data["cutoff"], data["a"])

    @classmethod
    def from_json(cls, text: str) -> "Alphabet":
        return cls.from_dict(json.loads(text))


def build_em_wedge_alphabet(a: int, max_samelson_degree: int) -> Alphabet:
    """Generators x_i (degree 2ai) and y_j (degree 2aj+1) up to the cutoff."""
    if a < 1:
        raise InvalidArgument(f"a must be a positive integer, got {a}")
    if max_samelson_degree < 2 * a:
        raise InvalidArgument(
            f"cutoff {max_samelson_degree} is below the first generator degree {2 * a}"
        )
    gens = []
    i = 1
    while 2 * a * i <= max_samelson_degree:
        gens.append(_make(Family.X, i, 2 * a * i, len(gens)))
        if 2 * a * i + 1 <= max_samelson_degree:
            gens.append(_make(Family.Y, i, 2 * a * i + 1, len(gens)))
        i += 1
    return Alphabet(tuple(gens), max_samelson_degree, a)


def build_sphere_wedge_alphabet(whitehead_dims: Sequence[int]) -> Alphabet:
    """Generators r_1 < ... < r_k for the wedge of spheres of the given dimensions."""
    dims = list(whitehead_dims)
    if not dims:
        raise InvalidArgument("need at least one sphere")
    for n in dims:
        if int(n) != n or n < 2:
            raise InvalidArgument(f"sphere dimension must be an integer >= 2, got {n}")
    gens = tuple(_make(Family.SPHERE, j + 1, int(n) - 1, j) for j, n in enumerate(dims))
    return Alphabet(gens, None, None)
