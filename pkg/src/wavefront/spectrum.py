"""
Exponent bookkeeping for representations induced from Speh data
Delta(tau_1, b_1)|.|^{s_1} x ... x Delta(tau_r, b_r)|.|^{s_r}.

Only the combinatorial shadow is modelled: each tau_i is an opaque label with
rank a_i, each twist is its real part, and a Speh block of length b is its
exponent ladder (1-b)/2, ..., (b-1)/2.

The ladder is relabelled by columns s^(l), ..., s^(1), h^(1), ..., h^(k)
(l = ceil(b/2), k = floor(b/2)). Stacking all cusps against the longest
ladder regroups the inducing data into columns whose sizes form the top
orbit partition; the regrouped pieces are generic as long as no two entries
of a column sit at a forbidden exponent distance.

>>> d = IsobaricDatum.parse("1:3:0,1:4:0,1:5:0")
>>> str(d.top_orbit()), str(d.top_orbit().transpose())
('3+3+3+2+1', '5+4+3')
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .gl import format_rational
from .partitions import Partition, not_dominated, partitions_of, top_orbit, transpose, union, rectangle

__all__ = [
    "CuspidalDatum", "IsobaricDatum", "Column", "ColumnEntry", "ColumnArrangement",
    "Violation", "TopOrbitCertificate", "AssumptionRefused", "LeviInductionDescription",
    "speh_exponents", "ell_k", "assumption_check", "arrange_columns",
    "column_genericity", "column_violations", "pipeline", "unramified_levi_datum", "parse_rational",
    "same_parity_ok", "odd_even_ok", "generic_difference_ok",
]

HALF = Fraction(1, 2)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


@dataclass(frozen=True)
class CuspidalDatum:
    a: int
    b: int
    re_s: Fraction = Fraction(0)
    label: str = ""

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive, got a={self.a}, b={self.b}")
        object.__setattr__(self, "re_s", Fraction(self.re_s))

    @property
    def odd(self) -> bool:
        return self.b % 2 == 1


@dataclass(frozen=True)
class IsobaricDatum:
    cusps: tuple[CuspidalDatum, ...]

    def __init__(self, cusps: Iterable):
        cusps = tuple(c if isinstance(c, CuspidalDatum) else CuspidalDatum(*c) for c in cusps)
        if not cusps:
            raise ValueError("an isobaric datum needs at least one cuspidal block")
        cusps = tuple(c if c.label else CuspidalDatum(c.a, c.b, c.re_s, f"tau{k + 1}")
                      for k, c in enumerate(cusps))
        object.__setattr__(self, "cusps", cusps)

    @classmethod
    def parse(cls, text: str) -> IsobaricDatum:
        """Comma-separated "a:b:s" records; s may be omitted (defaults to 0)."""
        cusps = []
        for rec in filter(None, (t.strip() for t in text.split(","))):
            fields = rec.split(":")
            if len(fields) not in (2, 3):
                raise ValueError(f"expected a:b or a:b:s, got {rec!r}")
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise ValueError(f"a and b must be integers in {rec!r}") from None
            s = parse_rational(fields[2]) if len(fields) == 3 else Fraction(0)
            cusps.append(CuspidalDatum(a, b, s))
        return cls(cusps)

    def __str__(self) -> str:
        return ",".join(f"{c.a}:{c.b}:{c.re_s}" for c in self.cusps)

    def __len__(self) -> int:
        return len(self.cusps)

    def __iter__(self):
        return iter(self.cusps)

    @property
    def n(self) -> int:
        return sum(c.a * c.b for c in self.cusps)

    def top_orbit(self) -> Partition:
        return top_orbit([(c.a, c.b) for c in self.cusps])

    def transpose_form(self) -> Partition:
        """[b_1^{a_1} ... b_r^{a_r}]^t, the same partition computed the other way."""
        return transpose(union(rectangle(c.b, c.a) for c in self.cusps))


def speh_exponents(b: int) -> list[Fraction]:
    if b < 1:
        raise ValueError("b must be positive")
    return [Fraction(1 - b + 2 * k, 2) for k in range(b)]


def ell_k(b: int) -> tuple[int, int]:
    if b < 1:
        raise ValueError("b must be positive")
    return (b + 1) // 2, b // 2


# --- Assumption on the twists -------------------------------------------------

def generic_difference_ok(d: Fraction) -> bool:
    """d in (-inf, -1] u [0, 1) u (1, inf)."""
    return d <= -1 or 0 <= d < 1 or d > 1


def same_parity_ok(d: Fraction) -> bool:
    return generic_difference_ok(d)


def odd_even_ok(d: Fraction) -> bool:
    """d in (-inf, -3/2] u [-1/2, 1/2) u (1/2, inf)."""
    return d <= Fraction(-3, 2) or Fraction(-1, 2) <= d < HALF or d > HALF


@dataclass(frozen=True)
class Violation:
    i: int  # 0-based cusp indices of the offending ordered pair
    j: int
    difference: Fraction
    condition: str

    def to_json(self) -> dict:
        return {"i": self.i + 1, "j": self.j + 1,
                "difference": format_rational(self.difference), "condition": self.condition}


def assumption_violations(data: IsobaricDatum) -> list[Violation]:
    out = []
    for i, ci in enumerate(data.cusps):
        for j, cj in enumerate(data.cusps):
            if i == j:
                continue
            d = ci.re_s - cj.re_s
            if ci.odd == cj.odd:
                if not same_parity_ok(d):
                    out.append(Violation(i, j, d, "same-parity"))
            elif ci.odd and not odd_even_ok(d):
                out.append(Violation(i, j, d, "odd-even"))
    return out


def assumption_check(data: IsobaricDatum) -> tuple[bool, Violation | None]:
    """
    Check the twist conditions on every ordered pair (i, j):
      same parity of b:      Re(s_i - s_j) in (-inf, -1] u [0, 1) u (1, inf)
      b_i odd and b_j even:  Re(s_i - s_j) in (-inf, -3/2] u [-1/2, 1/2) u (1/2, inf)
    Pairs with b_i even and b_j odd carry no condition of their own.
    """
    violations = assumption_violations(data)
    return (not violations), (violations[0] if violations else None)


# --- Column arrangement -------------------------------------------------------

@dataclass(frozen=True)
class ColumnEntry:
    cusp: int  # 0-based index into the datum, in input order
    base: Fraction
    exponent: Fraction  # base + re_s
    odd: bool

    def to_json(self) -> dict:
        return {"cusp": self.cusp + 1, "base": format_rational(self.base),
                "exponent": format_rational(self.exponent), "odd_b": self.odd}


@dataclass(frozen=True)
class Column:
    kind: str  # "s" or "h"
    index: int
    entries: tuple[ColumnEntry, ...]
    size: int

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index, "size": self.size,
                "entries": [e.to_json() for e in self.entries]}


def _base_exponent(kind: str, index: int, b: int) -> Fraction | None:
    ell, k = ell_k(b)
    shift = 0 if b % 2 else HALF
    if kind == "s":
        return Fraction(1 - index) - shift if index <= ell else None
    return Fraction(index) - shift if index <= k else None


@dataclass(frozen=True)
class ColumnArrangement:
    data: IsobaricDatum
    columns: tuple[Column, ...]  # in order s^(l), ..., s^(1), h^(1), ..., h^(k)
    order: tuple[int, ...] = field(default=())  # cusp indices sorted by b descending

    def sizes(self) -> Partition:
        return Partition.from_parts(c.size for c in self.columns)

    def eta_columns(self) -> list[Column]:
        """Columns reordered by size, largest first (stable), i.e. the factors of the Levi."""
        return sorted(self.columns, key=lambda c: -c.size)

    def appearances(self, cusp: int) -> int:
        return sum(1 for c in self.columns for e in c.entries if e.cusp == cusp)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.columns]


def arrange_columns(data: IsobaricDatum) -> ColumnArrangement:
    order = tuple(sorted(range(len(data)), key=lambda i: -data.cusps[i].b))
    b_max = data.cusps[order[0]].b
    ell, k = ell_k(b_max)
    slots = [("s", q) for q in range(ell, 0, -1)] + [("h", j) for j in range(1, k + 1)]
    columns = []
    for kind, index in slots:
        entries = []
        for i, c in enumerate(data.cusps):
            base = _base_exponent(kind, index, c.b)
            if base is not None:
                entries.append(ColumnEntry(i, base, base + c.re_s, c.odd))
        columns.append(Column(kind, index, tuple(entries),
                              sum(data.cusps[e.cusp].a for e in entries)))
    arr = ColumnArrangement(data, tuple(columns), order)
    assert arr.sizes() == data.top_orbit(), "column sizes must reproduce the top orbit"
    return arr


def column_violations(arr: ColumnArrangement) -> list[tuple[Column, ColumnEntry, ColumnEntry]]:
    """
    Every ordered pair of entries of a column sitting at a forbidden distance.

    Each column is read in its normal form: odd-b entries first, then even-b
    entries. An entry x preceding y must satisfy
    nu_x - nu_y in (-inf, -1] u [0, 1) u (1, inf); inside one parity class
    either entry may come first, so both orders are checked there.
    """
    out = []
    for col in arr.columns:
        for x in col.entries:
            for y in col.entries:
                if x is y or (y.odd and not x.odd):
                    continue
                if not generic_difference_ok(x.exponent - y.exponent):
                    out.append((col, x, y))
    return out


def column_genericity(arr: ColumnArrangement) -> tuple[bool, tuple[Column, ColumnEntry, ColumnEntry] | None]:
    violations = column_violations(arr)
    return (not violations), (violations[0] if violations else None)


# --- Certificate --------------------------------------------------------------

class AssumptionRefused(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        v = self.violations[0]
        super().__init__(
            f"twist condition ({v.condition}) fails for ordered pair ({v.i + 1}, {v.j + 1}): "
            f"Re(s_i - s_j) = {v.difference}")


@dataclass(frozen=True)
class TopOrbitCertificate:
    data: IsobaricDatum
    mu: Partition
    mu_transpose: Partition
    arrangement: ColumnArrangement

    def vanishing_partitions(self) -> list[Partition]:
        """Partitions lambda of n bigger than or not related to mu."""
        return [lam for lam in partitions_of(self.mu.n) if not_dominated(lam, self.mu)[0]]

    def to_json(self) -> dict:
        return {
            "data": [{"a": c.a, "b": c.b, "re_s": format_rational(c.re_s), "label": c.label}
                     for c in self.data.cusps],
            "n": self.mu.n,
            "mu": str(self.mu),
            "mu_transpose": str(self.mu_transpose),
            "columns": self.arrangement.to_json(),
            "eta_order": [c.name for c in self.arrangement.eta_columns()],
            "vanishing": {
                "rule": "some prefix sum of lambda exceeds the matching prefix sum of mu",
                "partitions": [str(p) for p in self.vanishing_partitions()],
            },
            "assumption": {"pass": True, "violations": []},
        }


def assumption_report(data: IsobaricDatum) -> dict:
    violations = assumption_violations(data)
    return {"pass": not violations, "violations": [v.to_json() for v in violations]}


def pipeline(data: IsobaricDatum) -> TopOrbitCertificate:
    violations = assumption_violations(data)
    if violations:
        raise AssumptionRefused(violations)
    mu = data.top_orbit()
    return TopOrbitCertificate(data, mu, mu.transpose(), arrange_columns(data))


@dataclass(frozen=True)
class LeviInductionDescription:
    """Parabolic P_{mu^t} and, per cusp, a_i determinant-character slots of size b_i."""
    blocks: Partition
    slots: tuple[tuple[int, int], ...]  # (cusp index, slot size), a_i copies per cusp

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks.parts),
                "slots": [{"cusp": i + 1, "size": b} for i, b in self.slots]}


def unramified_levi_datum(data: IsobaricDatum) -> LeviInductionDescription:
    slots = tuple((i, c.b) for i, c in enumerate(data.cusps) for _ in range(c.a))
    blocks = data.top_orbit().transpose()
    assert Partition.from_parts(b for _, b in slots) == blocks
    return LeviInductionDescription(blocks, slots)
