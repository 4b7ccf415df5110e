"""Census tables, automorphism bookkeeping and the verification driver."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .alphabet import Alphabet, build_em_wedge_alphabet
from .basis import (
    LEAF,
    PURE_X,
    PURE_Y,
    classify,
    render_commutator,
    render_whitehead,
    vanishing_skeleton_dim,
)
from .errors import InvalidArgument, VerificationFailure
from .hilton import (
    RankTable,
    hilton_rank_table,
    pbw_dimension_oracle,
    r_sequence,
    split_indecomposable_decomposable,
)
from .tensoralg import expand, graded_commutator, span_rank

VERIFY_COST_LIMIT = 14


def em_alphabet_for(a: int, max_whitehead_dim: int) -> Alphabet:
    return build_em_wedge_alphabet(a, max(max_whitehead_dim - 1, 2 * a))


# -- census ------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    whitehead_dim: int
    indecomposable_label: Optional[str]
    pure_entries: tuple[str, ...]
    hybrid_entries: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "dim": self.whitehead_dim,
            "indecomposable": self.indecomposable_label,
            "pure": list(self.pure_entries),
            "hybrid": list(self.hybrid_entries),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRow":
        return cls(d["dim"], d["indecomposable"], tuple(d["pure"]), tuple(d["hybrid"]))


def census(a: int, max_whitehead_dim: int = 13, unicode: bool = False,
           max_weight: Optional[int] = None) -> list[CensusRow]:
    """Generators of pi_*(Sigma X) (x) Q by dimension, Whitehead squares left out."""
    if a < 1:
        raise InvalidArgument(f"a must be positive, got {a}")
    first = 2 * a + 1
    if max_whitehead_dim < first:
        return []
    table = hilton_rank_table(em_alphabet_for(a, max_whitehead_dim), max_whitehead_dim,
                              include_squares=False, max_weight=max_weight)
    buckets = {d: ([], [], []) for d in range(first, max_whitehead_dim + 1)}
    for bp in table.products:
        if bp.height < first:
            continue
        kind = classify(bp)
        slot = 0 if kind == LEAF else 1 if kind in (PURE_X, PURE_Y) else 2
        buckets[bp.height][slot].append(render_whitehead(bp, unicode))
    rows = []
    for d, (ind, pure, hyb) in buckets.items():
        rows.append(CensusRow(d, ind[0] if ind else None, tuple(pure), tuple(hyb)))
    return rows


def census_differences(rows: Sequence[CensusRow], reference: Sequence[CensusRow]) -> list[str]:
    """Expression-level mismatches against a reference census, as warning lines.

    Same-weight ordering is a convention, so a differing expression is not
    an error by itself; counts are compared elsewhere.
    """
    ref = {r.whitehead_dim: r for r in reference}
    out = []
    for row in rows:
        other = ref.get(row.whitehead_dim)
        if other is None:
            continue
        for column in ("pure_entries", "hybrid_entries"):
            ours, theirs = set(getattr(row, column)), set(getattr(other, column))
            name = column.split("_")[0]
            for e in sorted(ours - theirs):
                out.append(f"dim {row.whitehead_dim} {name}: {e} not in reference")
            for e in sorted(theirs - ours):
                out.append(f"dim {row.whitehead_dim} {name}: reference entry {e} not produced")
    return out


# -- automorphism ledger --------------------------------------------------------


@dataclass(frozen=True)
class AutLedgerRow:
    m: int
    r_m: int
    I_rank: int
    D_rank: int
    hom_rank: int
    aut_I_order: Optional[int]
    cumulative_order: Optional[int]

    def to_dict(self) -> dict:
        return asdict(self)


def _aut_free_order(rank: int) -> Optional[int]:
    # |GL_n(Z)|: 1 for n = 0, 2 for n = 1, infinite beyond
    return {0: 1, 1: 2}.get(rank)


def aut_ledger(a: int, max_m: int, include_squares: bool = False,
               schedule: str = "r") -> list[AutLedgerRow]:
    """Rank bookkeeping for 0 -> Hom(I, D) -> Aut(<= r_m) -> Aut(<= r_{m-1}) + Aut(I) -> 0.

    ``schedule="r"`` visits the dimensions r_1 < r_2 < ...; ``"all"`` visits
    every dimension from 2a+1 on, with m counting the visited dimensions.
    ``cumulative_order`` is the order of the automorphism group of the whole
    truncation through r_m when every dimension so far has a trivial Hom
    term, and None (infinite) otherwise.
    """
    if a < 1 or max_m < 1:
        raise InvalidArgument("a and max_m must be positive")
    if schedule == "r":
        dims = [r_sequence(a, m) for m in range(1, max_m + 1)]
    elif schedule == "all":
        dims = list(range(2 * a + 1, 2 * a + 1 + max_m))
    else:
        raise InvalidArgument(f"unknown schedule {schedule!r}")
    top = dims[-1]
    table = hilton_rank_table(em_alphabet_for(a, top), top, include_squares)
    rows = []
    for m, dim in enumerate(dims, start=1):
        i_rank, d_rank = split_indecomposable_decomposable(table, dim)
        order: Optional[int] = 1
        for d in range(2, dim + 1):
            i_d, d_d = split_indecomposable_decomposable(table, d)
            f = _aut_free_order(i_d)
            if order is None or f is None or i_d * d_d:
                order = None
                break
            order *= f
        rows.append(AutLedgerRow(m, dim, i_rank, d_rank, i_rank * d_rank,
                                 _aut_free_order(i_rank), order))
    return rows


# -- vanishing skeleta ----------------------------------------------------------


@dataclass(frozen=True)
class SkeletonRow:
    whitehead: str
    commutator: str
    kind: str
    weight: int
    x_count: int
    skeleton_dim: int
    whitehead_degree: int


def skeleton_table(a: int, max_whitehead_dim: int = 13, unicode: bool = False) -> list[SkeletonRow]:
    table = hilton_rank_table(em_alphabet_for(a, max_whitehead_dim), max_whitehead_dim)
    rows = []
    for bp in table.products:
        if bp.weight < 2:
            continue
        xs = sum(1 for g in bp.leaves() if g.family.value == "X")
        rows.append(SkeletonRow(render_whitehead(bp, unicode), render_commutator(bp, unicode),
                                classify(bp), bp.weight, xs, vanishing_skeleton_dim(bp, a),
                                bp.whitehead_degree))
    return rows


# -- verification -----------------------------------------------------------------


@dataclass(frozen=True)
class DimensionCheck:
    dim: int
    basic_count: int
    square_count: int
    span_rank: int
    pbw: int

    @property
    def hilton(self) -> int:
        return self.basic_count + self.square_count

    @property
    def passed(self) -> bool:
        return self.hilton == self.span_rank == self.pbw


@dataclass
class VerificationReport:
    checks: list[DimensionCheck]
    dumps: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[DimensionCheck]:
        return next((c for c in self.checks if not c.passed), None)

    def raise_for_failure(self) -> None:
        bad = self.first_failure
        if bad is not None:
            raise VerificationFailure(bad.dim, {"hilton": bad.hilton, "span_rank": bad.span_rank,
                                                "pbw": bad.pbw})

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({len(self.checks)} dimensions checked)"
        bad = self.first_failure
        return (f"FAIL at dimension {bad.dim}: hilton={bad.hilton} "
                f"span_rank={bad.span_rank} pbw={bad.pbw}")


def verify(source: Union[int, Alphabet], max_whitehead_dim: int = 13, *,
           allow_large: bool = False, dump: bool = False,
           max_weight: Optional[int] = None) -> VerificationReport:
    """Compare three independent counts in every dimension 2..max.

    ``source`` is either the parameter a of the Eilenberg-MacLane wedge or
    an explicit alphabet.  The counts are: basic products plus Whitehead
    squares, the rank of their tensor-algebra expansions, and the PBW
    dimension of the free graded Lie algebra.
    """
    if max_whitehead_dim < 2:
        raise InvalidArgument("max_whitehead_dim must be at least 2")
    if max_whitehead_dim > VERIFY_COST_LIMIT and not allow_large:
        raise InvalidArgument(
            f"max_whitehead_dim {max_whitehead_dim} exceeds {VERIFY_COST_LIMIT}; pass allow_large=True"
        )
    if isinstance(source, Alphabet):
        alphabet = source
    else:
        alphabet = em_alphabet_for(source, max_whitehead_dim)
    table = hilton_rank_table(alphabet, max_whitehead_dim, include_squares=True,
                              max_weight=max_weight)
    pbw = pbw_dimension_oracle(alphabet, max_whitehead_dim - 1)

    expansions = {bp: expand(bp) for bp in table.products}
    by_dim: dict[int, list] = {d: [] for d in range(2, max_whitehead_dim + 1)}
    for bp, e in expansions.items():
        by_dim[bp.height].append((render_whitehead(bp), e))
    # squares after the basic products of their dimension
    for bp, e in expansions.items():
        if bp.height % 2 == 0 and 2 * bp.height - 1 <= max_whitehead_dim:
            label = f"[{render_whitehead(bp)}, {render_whitehead(bp)}]"
            by_dim[2 * bp.height - 1].append((label, graded_commutator(e, e)))

    report = VerificationReport([])
    for rec in table:
        d = rec.whitehead_dim
        polys = [p for _, p in by_dim[d]]
        report.checks.append(DimensionCheck(
            d, rec.indecomposable_rank + rec.basic_decomposable_rank, rec.whitehead_square_rank,
            span_rank(polys) if polys else 0, pbw[d - 1]))
        if dump:
            report.dumps[d] = [(label, p.to_text()) for label, p in by_dim[d]]
    return report


# -- formatting ------------------------------------------------------------------------


def text_table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    rows = [[("-" if v is None else str(v)) for v in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in rows:
        widths = [max(w, len(v)) for w, v in zip(widths, r)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def csv_table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(headers)
    for r in rows:
        w.writerow(["" if v is None else v for v in r])
    return out.getvalue()


def format_census(rows: Sequence[CensusRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], ensure_ascii=False, indent=1) + "\n"
    headers = ["dim", "indecomposable", "pure", "hybrid"]
    body = [[r.whitehead_dim, r.indecomposable_label, "; ".join(r.pure_entries) or None,
             "; ".join(r.hybrid_entries) or None] for r in rows]
    return csv_table(headers, body) if fmt == "csv" else text_table(headers, body)


def format_rank_table(table: RankTable, fmt: str = "text") -> str:
    if fmt == "json":
        return table.to_json() + "\n"
    if fmt == "csv":
        return table.to_csv()
    return text_table(["dim", "I", "D_basic", "D_square", "total"],
                      [[r.whitehead_dim, r.indecomposable_rank, r.basic_decomposable_rank,
                        r.whitehead_square_rank, r.total_rank] for r in table])


def format_aut(rows: Sequence[AutLedgerRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows]) + "\n"
    headers = ["m", "r_m", "I", "D", "hom", "|Aut(I)|", "|Aut(<=r_m)|"]
    body = [[r.m, r.r_m, r.I_rank, r.D_rank, r.hom_rank,
             "inf" if r.aut_I_order is None else r.aut_I_order,
             "inf" if r.cumulative_order is None else r.cumulative_order] for r in rows]
    return csv_table(headers, body) if fmt == "csv" else text_table(headers, body)


def format_skeleton(rows: Sequence[SkeletonRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], ensure_ascii=False) + "\n"
    headers = ["whitehead", "commutator", "class", "l", "t", "skeleton", "whitehead_degree"]
    body = [[r.whitehead, r.commutator, r.kind, r.weight, r.x_count, r.skeleton_dim,
             r.whitehead_degree] for r in rows]
    return csv_table(headers, body) if fmt == "csv" else text_table(headers, body)


def format_verify(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({
            "passed": report.passed,
            "dimensions": [dict(asdict(c), hilton=c.hilton, passed=c.passed) for c in report.checks],
            "dumps": {str(k): v for k, v in report.dumps.items()},
        }) + "\n"
    headers = ["dim", "basic", "squares", "span_rank", "pbw", "status"]
    body = [[c.dim, c.basic_count, c.square_count, c.span_rank, c.pbw,
             "PASS" if c.passed else "FAIL"] for c in report.checks]
    out = csv_table(headers, body) if fmt == "csv" else text_table(headers, body)
    if report.dumps and fmt == "text":
        for d, items in report.dumps.items():
            for label, text in items:
                out += f"{d}\t{label}\t{text}\n"
    return out + ("" if fmt == "csv" else report.summary() + "\n")
