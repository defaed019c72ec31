"""
Brute-force checks of why semi-Whittaker models of (s_n, u_lambda) vanish on
representations induced from the parabolic P_{mu^t} when lambda is bigger
than or not related to mu.

Two levels:

* Weyl level. For a permutation w, the simple root subgroup at (j, j+1) is
  moved by w to (w(j), w(j+1)); it lands in the block upper triangular
  P_{mu^t} iff the block of w(j) is not after the block of w(j+1). If some
  such root is marked by lambda, the character is nontrivial on
  U intersect w^{-1} P w and the double coset of w contributes nothing.

* Finite field level. Over F_q with the trivial inducing character,
  Hom_U(Ind_P^G 1, psi_lambda) has one dimension per double coset P g U on
  which psi_lambda is trivial on U intersect g^{-1} P g; everything is
  enumerated.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .partitions import Partition, not_dominated, partitions_of
from .whittaker import marked_simple_roots, nsu_span, standard_sn
from .gl import nilpotent_representative

__all__ = [
    "BlockMap", "WeylReport", "FiniteOracleReport", "BoundExceeded",
    "block_map", "weyl_check", "weyl_verdict", "cai_sweep", "gl_order",
    "finite_oracle", "finite_vanishing_sweep", "double_cosets", "max_n",
    "DEFAULT_MAX_N", "DEFAULT_MAX_GROUP",
]

DEFAULT_MAX_N = 8
DEFAULT_MAX_GROUP = 25000


class BoundExceeded(ValueError):
    pass


def max_n() -> int:
    return int(os.environ.get("WAVEFRONT_MAX_N", DEFAULT_MAX_N))


def max_group() -> int:
    return int(os.environ.get("WAVEFRONT_MAX_GROUP", DEFAULT_MAX_GROUP))


@dataclass(frozen=True)
class BlockMap:
    """Block index (0-based) of each position 0..n-1 for a consecutive block layout."""
    partition: Partition
    index: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.index)


def block_map(nu: Partition) -> BlockMap:
    return BlockMap(nu, tuple(k for k, d in enumerate(nu.parts) for _ in range(d)))


# --- Weyl level ---------------------------------------------------------------

@dataclass(frozen=True)
class WeylReport:
    lam: Partition
    mu: Partition
    all_pass: bool
    passing: int
    failing: int
    counterexample: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam), "mu": str(self.mu), "all_pass": self.all_pass,
            "passing": self.passing, "failing": self.failing,
            "counterexample": None if self.counterexample is None
            else [w + 1 for w in self.counterexample],
        }


def weyl_verdict(labels: Sequence[int], marked: Sequence[tuple[int, int]]) -> bool:
    """
    Pass iff some marked (j, j+1) has labels[j] <= labels[j+1], where
    labels[j] is the P-block receiving w(j).
    """
    return any(labels[j] <= labels[k] for j, k in marked)


def _check_sizes(lam: Partition, mu: Partition, bound: int | None) -> int:
    if lam.n != mu.n:
        raise ValueError(f"partitions of different sizes: {lam} vs {mu}")
    bound = max_n() if bound is None else bound
    if lam.n > bound:
        raise BoundExceeded(f"n = {lam.n} exceeds the enumeration bound {bound}")
    return lam.n


def _weyl_scan(n: int, marked: Sequence[tuple[int, int]], blocks: Sequence[int],
               first: int | None = None) -> tuple[int, int, tuple[int, ...] | None]:
    passing = failing = 0
    counterexample = None
    if first is None:
        perms: Iterator[tuple[int, ...]] = permutations(range(n))
    else:
        rest = [x for x in range(n) if x != first]
        perms = ((first,) + p for p in permutations(rest))
    for w in perms:
        if any(blocks[w[j]] <= blocks[w[k]] for j, k in marked):
            passing += 1
        else:
            failing += 1
            if counterexample is None:
                counterexample = w
    return passing, failing, counterexample


def weyl_check(lam: Partition, mu: Partition, bound: int | None = None,
               jobs: int = 1) -> WeylReport:
    """
    Run over all n! permutations w and test whether some root subgroup of a
    lambda-marked simple root is conjugated by w into P_{mu^t}.
    """
    n = _check_sizes(lam, mu, bound)
    marked = marked_simple_roots(lam)
    blocks = block_map(mu.transpose()).index
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_weyl_scan, [n] * n, [marked] * n, [blocks] * n, range(n)))
    else:
        parts = [_weyl_scan(n, marked, blocks)]
    passing = sum(p for p, _, _ in parts)
    failing = sum(f for _, f, _ in parts)
    # lexicographically least: chunks are in increasing first entry
    counterexample = next((c for _, _, c in parts if c is not None), None)
    return WeylReport(lam, mu, failing == 0, passing, failing, counterexample)


@dataclass
class SweepSummary:
    n: int
    pairs: int = 0
    qualifying: int = 0
    failures: list[dict] = field(default_factory=list)
    lines: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"n": self.n, "pairs": self.pairs, "qualifying": self.qualifying,
               "failures": self.failures, "ok": self.ok}
        out.update(self.extra)
        return out


def _cai_pair(args: tuple[Partition, Partition, int]) -> WeylReport:
    lam, mu, bound = args
    return weyl_check(lam, mu, bound)


def cai_sweep(n: int, bound: int | None = None, jobs: int = 1) -> SweepSummary:
    """weyl_check must pass for every ordered pair (lambda, mu) with lambda not dominated by mu."""
    bound = max_n() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {bound}")
    parts = list(partitions_of(n))
    summary = SweepSummary(n, pairs=len(parts) ** 2)
    todo = [(lam, mu, bound) for lam in parts for mu in parts if not_dominated(lam, mu)[0]]
    summary.qualifying = len(todo)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_cai_pair, todo, chunksize=4))
    else:
        reports = [_cai_pair(t) for t in todo]
    for report in reports:
        line = report.to_json()
        summary.lines.append(line)
        if not report.all_pass:
            summary.failures.append(line)
    return summary


# --- Finite field level -------------------------------------------------------

def gl_order(n: int, q: int) -> int:
    out = 1
    for k in range(n):
        out *= q ** n - q ** k
    return out


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


Mat = tuple[int, ...]  # row-major, entries in range(q)


def _mul(a: Mat, b: Mat, n: int, q: int) -> Mat:
    return tuple(sum(a[i * n + k] * b[k * n + j] for k in range(n)) % q
                 for i in range(n) for j in range(n))


def _det(a: Mat, n: int, q: int) -> int:
    m = [list(a[i * n:(i + 1) * n]) for i in range(n)]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] % q), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % q
        inv = pow(m[c][c], -1, q)
        for r in range(c + 1, n):
            f = m[r][c] * inv % q
            if f:
                m[r] = [(x - f * y) % q for x, y in zip(m[r], m[c])]
    return det % q


def _inverse(a: Mat, n: int, q: int) -> Mat:
    m = [list(a[i * n:(i + 1) * n]) + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] % q)
        m[c], m[piv] = m[piv], m[c]
        inv = pow(m[c][c], -1, q)
        m[c] = [x * inv % q for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % q for x, y in zip(m[r], m[c])]
    return tuple(x for row in m for x in row[n:])


def _identity(n: int) -> list[int]:
    return [int(i == j) for i in range(n) for j in range(n)]


def _elementary(n: int, i: int, j: int, c: int, q: int) -> Mat:
    m = _identity(n)
    m[i * n + j] = (m[i * n + j] + c) % q if i == j else c % q
    return tuple(m)


def _primitive_root(q: int) -> int:
    for g in range(1, q):
        if len({pow(g, k, q) for k in range(1, q)}) == q - 1:
            return g
    raise ValueError(q)


@lru_cache(maxsize=None)
def _group(n: int, q: int) -> tuple[Mat, ...]:
    return tuple(m for m in product(range(q), repeat=n * n) if _det(m, n, q))


def _parabolic_generators(blocks: Sequence[int], n: int, q: int) -> list[Mat]:
    gens = []
    g = _primitive_root(q)
    for i in range(n):
        if g != 1:
            m = _identity(n)
            m[i * n + i] = g
            gens.append(tuple(m))
        for j in range(n):
            if i != j and blocks[i] <= blocks[j]:
                gens.append(_elementary(n, i, j, 1, q))
    return gens


def _in_parabolic(m: Mat, blocks: Sequence[int], n: int) -> bool:
    return all(m[i * n + j] == 0 for i in range(n) for j in range(n) if blocks[i] > blocks[j])


def _reduce_mod(x: Fraction, q: int) -> int:
    if x.denominator % q == 0:
        raise ValueError(f"coefficient {x} is not defined mod {q}")
    return x.numerator * pow(x.denominator, -1, q) % q


def _unipotent_elements(n: int, q: int, lam: Partition | None, variant: str) -> list[Mat]:
    """Elements of U: full upper unitriangular, or I + span of the halved-grading n_{s,u}."""
    if variant == "full":
        upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
        out = []
        for vals in product(range(q), repeat=len(upper)):
            m = _identity(n)
            for (i, j), x in zip(upper, vals):
                m[i * n + j] = x
            out.append(tuple(m))
        return out
    if variant != "halved":
        raise ValueError(f"unknown unipotent variant {variant!r}")
    u = nilpotent_representative(lam)
    s = standard_sn(n, halved=True)
    # u_lambda sits in degree -1 for the halved grading: not a Whittaker pair
    basis = [[_reduce_mod(x, q) for x in v] for v in nsu_span(s, u).nsu_basis]
    seen = set()
    for coeffs in product(range(q), repeat=len(basis)):
        m = _identity(n)
        for c, v in zip(coeffs, basis):
            for k, x in enumerate(v):
                m[k] = (m[k] + c * x) % q
        seen.add(tuple(m))
    return sorted(seen)


@dataclass(frozen=True)
class DoubleCosets:
    n: int
    q: int
    blocks: tuple[int, ...]
    representatives: tuple[Mat, ...]
    sizes: tuple[int, ...]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@lru_cache(maxsize=None)
def double_cosets(n: int, q: int, mu_t: Partition, u_gens: tuple[Mat, ...] | None = None) -> DoubleCosets:
    """P_{mu_t} \\ GL_n(F_q) / U by union-find over generator moves."""
    group = _group(n, q)
    index = {g: k for k, g in enumerate(group)}
    blocks = block_map(mu_t).index
    p_gens = _parabolic_generators(blocks, n, q)
    if u_gens is None:
        u_gens = tuple(_elementary(n, j, j + 1, 1, q) for j in range(n - 1))
    uf = _UnionFind(len(group))
    for k, g in enumerate(group):
        for p in p_gens:
            uf.union(k, index[_mul(p, g, n, q)])
        for u in u_gens:
            uf.union(k, index[_mul(g, u, n, q)])
    sizes: dict[int, int] = {}
    for k in range(len(group)):
        r = uf.find(k)
        sizes[r] = sizes.get(r, 0) + 1
    roots = sorted(sizes)
    return DoubleCosets(n, q, blocks, tuple(group[r] for r in roots),
                        tuple(sizes[r] for r in roots))


@dataclass(frozen=True)
class FiniteOracleReport:
    n: int
    q: int
    lam: Partition
    mu: Partition
    double_cosets: int
    trivial_restrictions: int
    coset_sizes_total: int
    group_order: int
    unipotent: str = "full"
    wall_time: float = 0.0

    @property
    def hom_dim(self) -> int:
        return self.trivial_restrictions

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n, "q": self.q, "lambda": str(self.lam), "mu": str(self.mu),
            "unipotent": self.unipotent, "double_cosets": self.double_cosets,
            "trivial_restrictions": self.trivial_restrictions, "hom_dim": self.hom_dim,
            "coset_sizes_total": self.coset_sizes_total, "group_order": self.group_order,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _check_group(n: int, q: int, bound: int | None) -> None:
    if not _is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    bound = max_group() if bound is None else bound
    if gl_order(n, q) > bound:
        raise BoundExceeded(f"|GL_{n}(F_{q})| = {gl_order(n, q)} exceeds the bound {bound}")


def finite_oracle(n: int, q: int, lam: Partition, mu: Partition, bound: int | None = None,
                  unipotent: str = "full") -> FiniteOracleReport:
    """
    Count the (P_{mu^t}, U) double cosets of GL_n(F_q) on which the linear
    character u -> sum of u_{j,j+1} over lambda-marked (j, j+1) is trivial on
    U intersect g^{-1} P g. That count is the Hom dimension.
    """
    start = time.perf_counter()
    if lam.n != n or mu.n != n:
        raise ValueError(f"lambda and mu must be partitions of {n}")
    _check_group(n, q, bound)
    u_elems = _unipotent_elements(n, q, lam, unipotent)
    u_gens = None if unipotent == "full" else tuple(u_elems)
    cosets = double_cosets(n, q, mu.transpose(), u_gens)
    marked = marked_simple_roots(lam)
    trivial = 0
    for g in cosets.representatives:
        g_inv = _inverse(g, n, q)
        ok = True
        for u in u_elems:
            if sum(u[j * n + k] for j, k in marked) % q == 0:
                continue
            if _in_parabolic(_mul(_mul(g, u, n, q), g_inv, n, q), cosets.blocks, n):
                ok = False
                break
        trivial += ok
    return FiniteOracleReport(n, q, lam, mu, len(cosets.representatives), trivial,
                              sum(cosets.sizes), gl_order(n, q), unipotent,
                              time.perf_counter() - start)


def finite_vanishing_sweep(n: int, q: int, bound: int | None = None,
                           unipotent: str = "full") -> SweepSummary:
    """Hom dimension must be 0 for every (lambda, mu) with lambda not dominated by mu."""
    _check_group(n, q, bound)
    parts = list(partitions_of(n))
    summary = SweepSummary(n, pairs=len(parts) ** 2, extra={"q": q, "unipotent": unipotent})
    dominated = []
    sizes_ok = True
    for mu in parts:
        for lam in parts:
            report = finite_oracle(n, q, lam, mu, bound, unipotent)
            line = report.to_json()
            sizes_ok &= report.coset_sizes_total == report.group_order
            summary.lines.append(line)
            if not_dominated(lam, mu)[0]:
                summary.qualifying += 1
                if report.hom_dim != 0:
                    summary.failures.append(line)
            else:
                dominated.append({"lambda": str(lam), "mu": str(mu), "hom_dim": report.hom_dim})
    summary.extra["coset_sizes_match_group_order"] = sizes_ok
    summary.extra["dominated_pairs"] = dominated
    if not sizes_ok:
        summary.failures.append({"error": "double coset sizes do not sum to |GL_n(F_q)|"})
    return summary
