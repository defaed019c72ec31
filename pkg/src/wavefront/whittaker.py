"""
Whittaker pairs (s, u) in gl_n and the data of their degenerate Whittaker
coefficients: the unipotent algebra n_{s,u} and the character psi_u on it.

The standard semisimple element is taken doubled, s_n = diag(n-1, ..., 1-n),
so that adjacent subdiagonal entries sit in ad(s_n)-degree -2 and
(s_n, u_lambda) is a genuine Whittaker pair; with that grading n_{s_n,u} is
the whole strictly upper triangular algebra. The halved grading is kept
available (`standard_sn(n, halved=True)`) only for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .gl import (
    DiagonalSemisimple, GlElement, GradedDecomposition, bracket, block_offsets,
    elementary, format_rational, grade_by, jacobson_morozov, nilpotent_representative,
    pairing,
)
from .partitions import Partition

__all__ = [
    "WhittakerPair", "NilradicalData", "CharacterSupport", "NotAWhittakerPair",
    "standard_sn", "neutral_pair", "is_neutral_pair", "omega_radical", "nsu_formula",
    "nsu_span", "marked_simple_roots",
    "character_support", "semi_whittaker", "block_neutral_element",
]


class NotAWhittakerPair(ValueError):
    pass


@dataclass(frozen=True)
class WhittakerPair:
    s: DiagonalSemisimple
    u: GlElement

    def __post_init__(self):
        if self.s.n != self.u.n:
            raise ValueError("s and u live in different gl_n")
        bad = [(i, j) for i, j in self.u.support() if self.s.eigenvalue(i, j) != -2]
        if bad:
            raise NotAWhittakerPair(f"u has entries outside degree -2 at {bad}")

    @property
    def n(self) -> int:
        return self.s.n

    def grading(self) -> GradedDecomposition:
        return grade_by(self.s)


@dataclass(frozen=True)
class NilradicalData:
    """u_s = g^s_{>=1} (coordinate positions) and n_{s,u} (a subspace of it)."""
    n: int
    us_positions: tuple[tuple[int, int], ...]
    nsu_basis: tuple[tuple[Fraction, ...], ...]  # row-major n*n vectors

    @property
    def dim_us(self) -> int:
        return len(self.us_positions)

    @property
    def dim_nsu(self) -> int:
        return len(self.nsu_basis)

    def nsu_elements(self) -> list[GlElement]:
        return [GlElement.from_vector(self.n, v) for v in self.nsu_basis]

    def same_nsu(self, other: NilradicalData) -> bool:
        return linalg.same_span(self.nsu_basis, other.nsu_basis)

    def nsu_is_coordinate(self) -> list[tuple[int, int]] | None:
        """Positions if n_{s,u} is spanned by elementary matrices, else None."""
        positions = sorted({divmod(k, self.n) for v in self.nsu_basis
                            for k, x in enumerate(v) if x != 0})
        if len(positions) != self.dim_nsu:
            return None
        return positions

    def to_json(self) -> dict:
        coord = self.nsu_is_coordinate()
        out = {
            "dim_us": self.dim_us,
            "dim_nsu": self.dim_nsu,
            "us_positions": [[i + 1, j + 1] for i, j in self.us_positions],
        }
        if coord is not None:
            out["nsu_positions"] = [[i + 1, j + 1] for i, j in coord]
        else:
            out["nsu_basis"] = [[format_rational(x) for x in v] for v in self.nsu_basis]
        return out


def _echelon_basis(vectors: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    if not vectors:
        return ()
    m, pivots = linalg.rref(vectors)
    return tuple(tuple(row) for row in m[:len(pivots)])


def standard_sn(n: int, halved: bool = False) -> DiagonalSemisimple:
    """diag(n-1, n-3, ..., 1-n), or half of it if `halved`."""
    if n < 1:
        raise ValueError("n must be positive")
    s = DiagonalSemisimple(n - 1 - 2 * k for k in range(n))
    return s.scaled(Fraction(1, 2)) if halved else s


def block_neutral_element(mu: Partition) -> DiagonalSemisimple:
    """Blockwise diag(t-1, t-3, ..., 1-t) over the consecutive blocks of mu."""
    return DiagonalSemisimple(t - 1 - 2 * k for t in mu.parts for k in range(t))


def neutral_pair(lam: Partition) -> WhittakerPair:
    u = nilpotent_representative(lam)
    return WhittakerPair(jacobson_morozov(u).s, u)


def _solve_neutral(pair: WhittakerPair) -> GlElement | None:
    n = pair.n
    positions = pair.grading()[2]
    if not positions:
        return GlElement([[0] * n for _ in range(n)]) if pair.s.matrix().is_zero() else None
    # columns: [E_p, u] for E_p spanning g^s_2; unknowns are v's coordinates
    columns = [bracket(elementary(n, i, j), pair.u).vector() for i, j in positions]
    rows = [list(r) for r in zip(*columns)]
    x = linalg.solve(rows, pair.s.matrix().vector())
    if x is None:
        return None
    v = GlElement([[0] * n for _ in range(n)])
    for c, (i, j) in zip(x, positions):
        if c:
            v = v + elementary(n, i, j, c)
    return v


def is_neutral_pair(pair: WhittakerPair) -> bool:
    """
    Whether some v completes (v, s, u) to an sl2-triple. Any solution of
    [v, u] = s inside g^s_2 is automatically nilpotent with [s, v] = 2v.
    """
    return _solve_neutral(pair) is not None


def omega_radical(pair: WhittakerPair) -> NilradicalData:
    """
    n_{s,u} as the radical of omega_u(X, Y) = <u, [X, Y]> restricted to
    g^s_{>=1}, computed from the Gram matrix on the coordinate basis.
    """
    n = pair.n
    us = tuple(pair.grading().geq(1))
    basis = [elementary(n, i, j) for i, j in us]
    gram = [[pairing(pair.u, bracket(x, y)) for y in basis] for x in basis]
    kernel = linalg.nullspace(gram, len(basis)) if basis else []
    vectors = []
    for coeffs in kernel:
        v = [Fraction(0)] * (n * n)
        for c, (i, j) in zip(coeffs, us):
            v[i * n + j] += c
        vectors.append(v)
    return NilradicalData(n, us, _echelon_basis(vectors))


def nsu_formula(pair: WhittakerPair) -> NilradicalData:
    """
    n_{s,u} = g^s_{>1} + (g^s_1 intersect the centralizer of u).

    For integral gradings g^s_{>1} = g^s_{>=2}. With half-integral
    eigenvalues g^s_{3/2} also lies in the radical, since omega_u only pairs
    degree r with degree 2 - r, which is outside g^s_{>=1}.
    """
    return nsu_span(pair.s, pair.u)


def nsu_span(s: DiagonalSemisimple, u: GlElement) -> NilradicalData:
    """The same right-hand side for any (s, u), Whittaker pair or not."""
    n = s.n
    grading = grade_by(s)
    us = tuple(grading.geq(1))
    vectors = [elementary(n, i, j).vector() for i, j in us if s.eigenvalue(i, j) > 1]
    ones = grading[1]
    if ones:
        columns = [bracket(elementary(n, i, j), u).vector() for i, j in ones]
        rows = [list(r) for r in zip(*columns)]
        for coeffs in linalg.nullspace(rows):
            v = [Fraction(0)] * (n * n)
            for c, (i, j) in zip(coeffs, ones):
                v[i * n + j] += c
            vectors.append(v)
    return NilradicalData(n, us, _echelon_basis(vectors))


@dataclass(frozen=True)
class CharacterSupport:
    """
    The functional X -> <u, X> = sum of c_ij X_ij over marked positions (i, j),
    where c_ij = u_ji. Restricted to n_{s,u} it is the differential of psi_u.
    """
    n: int
    marks: tuple[tuple[tuple[int, int], Fraction], ...]

    def positions(self) -> list[tuple[int, int]]:
        return [p for p, _ in self.marks]

    def __call__(self, x: GlElement) -> Fraction:
        return sum((c * x[i, j] for (i, j), c in self.marks), Fraction(0))

    def to_json(self) -> list[dict]:
        return [{"position": [i + 1, j + 1], "coefficient": format_rational(c)}
                for (i, j), c in self.marks]


def character_support(pair: WhittakerPair) -> CharacterSupport:
    n = pair.n
    marks = []
    for i in range(n):
        for j in range(n):
            c = pair.u[j, i]
            if c != 0:
                # u in degree -2 puts (i, j) in degree 2, inside g_{>=2} and n_{s,u}
                assert pair.s.eigenvalue(i, j) == 2
                marks.append(((i, j), c))
    return CharacterSupport(n, tuple(marks))


def semi_whittaker(lam: Partition) -> tuple[WhittakerPair, CharacterSupport]:
    """The pair (s_n, u_lambda): full upper unitriangular group, character on within-block simple roots."""
    pair = WhittakerPair(standard_sn(lam.n), nilpotent_representative(lam))
    return pair, character_support(pair)


def marked_simple_roots(lam: Partition) -> list[tuple[int, int]]:
    """Adjacent positions (j, j+1) lying inside one block of lam."""
    return [(o + j, o + j + 1) for o, p in zip(block_offsets(lam), lam.parts) for j in range(p - 1)]
