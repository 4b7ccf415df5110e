"""Rational homotopy ranks of a wedge of spheres.

Each basic product of height h contributes a copy of pi_*(S^h) (x) Q: one
class in dimension h, plus the Whitehead square in dimension 2h - 1 when h
is even.  The per-dimension totals are cross-checked against the dimensions
of the free graded Lie algebra obtained from the tensor-algebra Hilbert
series by PBW factorisation.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .alphabet import Alphabet
from .basis import BasicProduct, enumerate_basic_products
from .errors import CutoffExceeded, InconsistentSeries, InvalidArgument, OutOfRange


def sphere_rational_ranks(sphere_dim: int, m: int) -> int:
    """Rank of pi_m(S^n) (x) Q."""
    if sphere_dim < 2:
        raise InvalidArgument(f"sphere dimension must be >= 2, got {sphere_dim}")
    if m == sphere_dim:
        return 1
    if sphere_dim % 2 == 0 and m == 2 * sphere_dim - 1:
        return 1
    return 0


@dataclass(frozen=True)
class RankRecord:
    whitehead_dim: int
    indecomposable_rank: int
    basic_decomposable_rank: int
    whitehead_square_rank: int

    @property
    def total_rank(self) -> int:
        return self.indecomposable_rank + self.basic_decomposable_rank + self.whitehead_square_rank

    @property
    def decomposable_rank(self) -> int:
        return self.basic_decomposable_rank + self.whitehead_square_rank


@dataclass(frozen=True)
class RankTable:
    records: tuple[RankRecord, ...]
    alphabet: Alphabet
    include_squares: bool
    products: tuple[BasicProduct, ...] = ()

    @property
    def max_dim(self) -> int:
        return self.records[-1].whitehead_dim if self.records else 1

    def __getitem__(self, dim: int) -> RankRecord:
        if not self.records or not 2 <= dim <= self.max_dim:
            raise OutOfRange(f"dimension {dim} outside the table range 2..{self.max_dim}")
        return self.records[dim - 2]

    def __iter__(self):
        return iter(self.records)

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["dim", "I", "D_basic", "D_square", "total"])
        for r in self.records:
            w.writerow([r.whitehead_dim, r.indecomposable_rank, r.basic_decomposable_rank,
                        r.whitehead_square_rank, r.total_rank])
        return out.getvalue()

    def to_json(self) -> str:
        rows = []
        for r in self.records:
            d = asdict(r)
            d["total_rank"] = r.total_rank
            rows.append(d)
        return json.dumps({"include_squares": self.include_squares,
                           "alphabet": self.alphabet.to_dict(), "records": rows})


def hilton_rank_table(alphabet: Alphabet, max_whitehead_dim: int,
                      include_squares: bool = False, *,
                      max_weight: Optional[int] = None) -> RankTable:
    if max_whitehead_dim < 2:
        raise InvalidArgument("max_whitehead_dim must be at least 2")
    if not alphabet.covers(max_whitehead_dim - 1):
        raise CutoffExceeded(
            f"dimension {max_whitehead_dim} needs generators up to degree "
            f"{max_whitehead_dim - 1}, alphabet is truncated at {alphabet.truncation_degree}"
        )
    products = enumerate_basic_products(alphabet, max_whitehead_dim, max_weight=max_weight)
    ind = [0] * (max_whitehead_dim + 1)
    dec = [0] * (max_whitehead_dim + 1)
    sq = [0] * (max_whitehead_dim + 1)
    for bp in products:
        h = bp.height
        for m in range(h, max_whitehead_dim + 1):
            if not sphere_rational_ranks(h, m):
                continue
            if m != h:
                if include_squares:
                    sq[m] += 1
            elif bp.weight == 1:
                ind[m] += 1
            else:
                dec[m] += 1
    records = tuple(RankRecord(m, ind[m], dec[m], sq[m]) for m in range(2, max_whitehead_dim + 1))
    return RankTable(records, alphabet, include_squares, tuple(products))


def split_indecomposable_decomposable(table: RankTable, whitehead_dim: int) -> tuple[int, int]:
    rec = table[whitehead_dim]
    return rec.indecomposable_rank, rec.decomposable_rank


def r_sequence(a: int, m: int) -> int:
    """The interleaved schedule 2an+1 (m = 2n-1), 2an+2 (m = 2n)."""
    if a < 1 or m < 1:
        raise InvalidArgument("a and m must be positive")
    n = (m + 1) // 2
    return 2 * a * n + (1 if m % 2 else 2)


def tensor_hilbert_series(alphabet: Alphabet, max_degree: int) -> list[int]:
    """Coefficients of 1 / (1 - sum_g t^|g|) up to ``max_degree``."""
    counts = [0] * (max_degree + 1)
    for g in alphabet:
        if g.samelson_degree <= max_degree:
            counts[g.samelson_degree] += 1
    series = [1] + [0] * max_degree
    for n in range(1, max_degree + 1):
        series[n] = sum(counts[k] * series[n - k] for k in range(1, n + 1))
    return series


def pbw_dimension_oracle(alphabet: Alphabet, max_samelson_degree: int) -> dict[int, int]:
    """Degree-wise dimensions of the free graded Lie algebra on the alphabet.

    Solves prod_{n even} (1 - t^n)^{-L_n} * prod_{n odd} (1 + t^n)^{L_n} =
    Hilbert series of the tensor algebra, one degree at a time.
    """
    if not alphabet.covers(max_samelson_degree):
        raise CutoffExceeded(
            f"degree {max_samelson_degree} exceeds the alphabet cutoff {alphabet.truncation_degree}"
        )
    top = max_samelson_degree
    target = tensor_hilbert_series(alphabet, top)
    partial = [Fraction(1)] + [Fraction(0)] * top
    dims: dict[int, int] = {}
    for n in range(1, top + 1):
        ln = target[n] - partial[n]
        if ln.denominator != 1 or ln < 0:
            raise InconsistentSeries(f"degree {n} solved to {ln}")
        ln = int(ln)
        dims[n] = ln
        for _ in range(ln):
            if n % 2 == 0:
                # times 1 / (1 - t^n)
                for k in range(n, top + 1):
                    partial[k] += partial[k - n]
            else:
                # times (1 + t^n)
                for k in range(top, n - 1, -1):
                    partial[k] += partial[k - n]
    return dims
