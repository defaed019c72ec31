"""
The Lie algebra gl_n over Q with exact entries.

Positions (i, j) are 0-based in the Python API; JSON renderings and the CLI
report them 1-based.

Conventions:
  * the invariant pairing is the trace form, pairing(X, Y) = tr(XY);
    the Killing form is 2n tr(XY) - 2 tr(X) tr(Y), so for trace-zero u the
    two differ by exactly the factor 2n and nilpotent representatives can be
    kept integral;
  * in an sl2-triple (v, s, u), v raises ([s, v] = 2v), u lowers
    ([s, u] = -2u) and [v, u] = s.

>>> u = nilpotent_representative(Partition(3))
>>> orbit_partition(u)
Partition(3)
>>> jacobson_morozov(u).s.diag
(Fraction(2, 1), Fraction(0, 1), Fraction(-2, 1))
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import linalg
from .partitions import Partition

__all__ = [
    "GlElement", "DiagonalSemisimple", "GradedDecomposition", "Sl2Triple",
    "bracket", "pairing", "killing_form", "elementary", "identity", "zero",
    "nilpotent_representative", "block_offsets", "orbit_partition",
    "grade_by", "centralizer_basis", "jordan_basis", "jacobson_morozov",
    "NotNilpotentError", "format_rational",
]


class NotNilpotentError(ValueError):
    pass


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GlElement:
    """An n x n matrix with Fraction entries, stored row-major."""
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("GlElement must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"GlElement([{body}])"

    def _check(self, other: GlElement) -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: gl_{self.n} vs gl_{other.n}")

    def __add__(self, other: GlElement) -> GlElement:
        self._check(other)
        return GlElement([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: GlElement) -> GlElement:
        self._check(other)
        return GlElement([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> GlElement:
        return GlElement([[-a for a in r] for r in self.rows])

    def __mul__(self, c) -> GlElement:
        c = Fraction(c)
        return GlElement([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: GlElement) -> GlElement:
        self._check(other)
        cols = list(zip(*other.rows))
        return GlElement([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                          for r in self.rows])

    def __pow__(self, k: int) -> GlElement:
        out = identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def rank(self) -> int:
        return linalg.rank(self.rows)

    def is_nilpotent(self) -> bool:
        return (self ** self.n).is_zero()

    def vector(self) -> list[Fraction]:
        """Row-major coordinates in the basis E_ij."""
        return [x for row in self.rows for x in row]

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> GlElement:
        return cls([vec[i * n:(i + 1) * n] for i in range(n)])

    def support(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j, x in enumerate(row) if x != 0]

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.rows]


def zero(n: int) -> GlElement:
    return GlElement([[0] * n for _ in range(n)])


def identity(n: int) -> GlElement:
    return GlElement([[int(i == j) for j in range(n)] for i in range(n)])


def elementary(n: int, i: int, j: int, c=1) -> GlElement:
    """c E_ij (0-based)."""
    return GlElement([[c if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])


def bracket(x: GlElement, y: GlElement) -> GlElement:
    return x @ y - y @ x


def pairing(x: GlElement, y: GlElement) -> Fraction:
    """The trace form tr(XY)."""
    x._check(y)
    return sum((x.rows[i][k] * y.rows[k][i] for i in range(x.n) for k in range(x.n)),
               Fraction(0))


def killing_form(x: GlElement, y: GlElement) -> Fraction:
    n = x.n
    return 2 * n * pairing(x, y) - 2 * x.trace() * y.trace()


@dataclass(frozen=True)
class DiagonalSemisimple:
    diag: tuple[Fraction, ...]

    def __init__(self, diag: Iterable):
        object.__setattr__(self, "diag", tuple(Fraction(x) for x in diag))

    @property
    def n(self) -> int:
        return len(self.diag)

    def matrix(self) -> GlElement:
        return GlElement([[self.diag[i] if i == j else 0 for j in range(self.n)]
                          for i in range(self.n)])

    def eigenvalue(self, i: int, j: int) -> Fraction:
        """ad(s) eigenvalue of E_ij."""
        return self.diag[i] - self.diag[j]

    def scaled(self, c) -> DiagonalSemisimple:
        return DiagonalSemisimple(Fraction(c) * x for x in self.diag)

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.diag]


@dataclass(frozen=True)
class GradedDecomposition:
    """Eigenspaces of ad(s) on gl_n as sets of coordinate positions."""
    n: int
    spaces: dict[Fraction, tuple[tuple[int, int], ...]]

    def __getitem__(self, r) -> tuple[tuple[int, int], ...]:
        return self.spaces.get(Fraction(r), ())

    def eigenvalues(self) -> list[Fraction]:
        return sorted(self.spaces, reverse=True)

    def geq(self, r) -> list[tuple[int, int]]:
        """Positions spanning g_{>= r}."""
        r = Fraction(r)
        return sorted(p for ev, ps in self.spaces.items() if ev >= r for p in ps)

    def basis(self, positions: Iterable[tuple[int, int]]) -> list[GlElement]:
        return [elementary(self.n, i, j) for i, j in positions]

    def to_json(self) -> dict[str, list[list[int]]]:
        return {format_rational(ev): [[i + 1, j + 1] for i, j in self.spaces[ev]]
                for ev in self.eigenvalues()}


def grade_by(s: DiagonalSemisimple) -> GradedDecomposition:
    spaces: dict[Fraction, list[tuple[int, int]]] = defaultdict(list)
    for i in range(s.n):
        for j in range(s.n):
            spaces[s.eigenvalue(i, j)].append((i, j))
    return GradedDecomposition(s.n, {ev: tuple(ps) for ev, ps in spaces.items()})


def block_offsets(lam: Partition) -> list[int]:
    """Starting index of each consecutive block of `lam`."""
    offsets, o = [], 0
    for p in lam.parts:
        offsets.append(o)
        o += p
    return offsets


def nilpotent_representative(lam: Partition, n: int | None = None) -> GlElement:
    """
    Lower-triangular representative: within each consecutive block, ones on
    the subdiagonal, so the block's first basis vector generates its chain.
    """
    n = lam.n if n is None else n
    if lam.n != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    rows = [[0] * n for _ in range(n)]
    for o, p in zip(block_offsets(lam), lam.parts):
        for j in range(p - 1):
            rows[o + j + 1][o + j] = 1
    return GlElement(rows)


def orbit_partition(u: GlElement) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = u.n
    ranks = [n]
    power = identity(n)
    while ranks[-1] > 0:
        power = power @ u
        r = power.rank()
        if r == ranks[-1]:
            raise NotNilpotentError("matrix is not nilpotent")
        ranks.append(r)
    # at_least[k] = number of blocks of size >= k+1
    at_least = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    from .partitions import transpose
    return transpose(Partition(at_least)) if at_least else Partition()


def centralizer_basis(u: GlElement) -> list[GlElement]:
    """Basis of {X : [X, u] = 0}."""
    n = u.n
    columns = [bracket(elementary(n, i, j), u).vector() for i in range(n) for j in range(n)]
    ad_u = [list(r) for r in zip(*columns)]
    return [GlElement.from_vector(n, v) for v in linalg.nullspace(ad_u)]


def _kernel(m: GlElement) -> list[list[Fraction]]:
    return linalg.nullspace(m.rows)


def jordan_basis(u: GlElement) -> tuple[GlElement, Partition]:
    """
    An invertible P with P^{-1} u P = nilpotent_representative(type), the
    columns of P being Jordan chains x, ux, u^2 x, ... of decreasing length.
    """
    n = u.n
    lam = orbit_partition(u)
    chains: list[list[list[Fraction]]] = []
    for k in range(lam[0], 0, -1):
        # vectors whose chain has length exactly k
        kernel_k = _kernel(u ** k)
        below = _kernel(u ** (k - 1)) if k > 1 else []
        # images of longer chains already reaching into ker u^k \ ker u^{k-1}
        taken = [chain[len(chain) - k] for chain in chains]
        span = below + taken
        for x in kernel_k:
            if linalg.span_rank(span + [x]) > linalg.span_rank(span):
                chain = [x]
                for _ in range(k - 1):
                    prev = chain[-1]
                    chain.append([sum((u.rows[i][j] * prev[j] for j in range(n)), Fraction(0))
                                  for i in range(n)])
                chains.append(chain)
                span = span + [x]
    columns = [v for chain in chains for v in chain]
    p = GlElement([list(r) for r in zip(*columns)]) if columns else identity(0)
    return p, lam


@dataclass(frozen=True)
class Sl2Triple:
    v: GlElement
    s: DiagonalSemisimple | GlElement
    u: GlElement

    def s_matrix(self) -> GlElement:
        return self.s.matrix() if isinstance(self.s, DiagonalSemisimple) else self.s

    def relations_hold(self) -> bool:
        s = self.s_matrix()
        return (bracket(s, self.v) == 2 * self.v
                and bracket(s, self.u) == -2 * self.u
                and bracket(self.v, self.u) == s)


def _standard_triple(lam: Partition) -> tuple[GlElement, DiagonalSemisimple]:
    n = lam.n
    v = [[0] * n for _ in range(n)]
    diag: list[int] = []
    for o, p in zip(block_offsets(lam), lam.parts):
        diag.extend(p - 1 - 2 * j for j in range(p))
        for j in range(1, p):
            v[o + j - 1][o + j] = j * (p - j)
    return GlElement(v), DiagonalSemisimple(diag)


def jacobson_morozov(u: GlElement) -> Sl2Triple:
    """
    Complete a nilpotent u to an sl2-triple (v, s, u).

    For a standard representative the answer is blockwise and s is diagonal;
    otherwise u is conjugated to standard form by a Jordan basis, and s comes
    back as a general matrix.
    """
    if not u.is_nilpotent():
        raise NotNilpotentError("Jacobson-Morozov needs a nilpotent element")
    lam = orbit_partition(u)
    if u == nilpotent_representative(lam):
        v, s = _standard_triple(lam)
        return Sl2Triple(v, s, u)
    p, lam = jordan_basis(u)
    p_inv = GlElement(linalg.inverse(p.rows))
    v0, s0 = _standard_triple(lam)
    return Sl2Triple(p @ v0 @ p_inv, p @ s0.matrix() @ p_inv, u)
