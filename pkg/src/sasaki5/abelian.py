"""Exact integer linear algebra and finite abelian groups.

Matrices are plain lists of lists of Python ints, so every entry is an
arbitrary-precision integer.  The main entry points are

* :func:`smith_normal_form` -- ``U @ M @ V == D`` with ``U``, ``V`` unimodular;
* :func:`cokernel` -- ``Z^cols / rowspace(M)`` in invariant-factor form;
* :func:`classify_torsion_shape` -- decompositions ``H <= G`` where ``H`` is one
  of the "large" torsion shapes and ``G/H`` is ``Z/r``, ``Z/r+Z/2`` or
  ``Z/r+Z/3``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from sympy import factorint

Matrix = list[list[int]]


# ---------------------------------------------------------------------------
# matrices

def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else [()] * cols
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, r)) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _as_matrix(M: Sequence[Sequence[int]]) -> tuple[Matrix, int, int]:
    A = [[int(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise ValueError("ragged matrix")
    return A, rows, cols


def smith_normal_form(M: Sequence[Sequence[int]], cols: int | None = None
                      ) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...`` and ``U``,
    ``V`` are unimodular.  The pivot is always the entry of smallest nonzero
    absolute value in the active submatrix.  ``cols`` is only needed for a
    matrix with zero rows.
    """
    A, r, c = _as_matrix(M)
    if r == 0:
        c = cols or 0
    U, V = identity(r), identity(c)
    _snf_in_place(A, r, c, U, V)
    return U, A, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith form (zeros included), without transforms."""
    A, r, c = _as_matrix(M)
    _snf_in_place(A, r, c, None, None)
    return [A[i][i] for i in range(min(r, c))]


def _snf_in_place(A: Matrix, r: int, c: int, U: Matrix | None, V: Matrix | None) -> None:
    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q, start):
        # row_dst -= q * row_src
        rd, rs = A[dst], A[src]
        for k in range(start, c):
            if rs[k]:
                rd[k] -= q * rs[k]
        if U is not None:
            ud, us = U[dst], U[src]
            for k in range(r):
                if us[k]:
                    ud[k] -= q * us[k]

    def add_col(dst, src, q, start):
        for k in range(start, r):
            row = A[k]
            if row[src]:
                row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            row = A[i]
            for j in range(t, c):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, A[i][t] // p, t)
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, A[t][j] // p, t)
            # remainders smaller than the pivot: move the smallest into place
            small = None
            for i in range(t + 1, r):
                a = A[i][t]
                if a and (small is None or abs(a) < small[0]):
                    small = (abs(a), i, None)
            for j in range(t + 1, c):
                a = A[t][j]
                if a and (small is None or abs(a) < small[0]):
                    small = (abs(a), None, j)
            if small is not None:
                if small[1] is not None:
                    swap_rows(t, small[1])
                else:
                    swap_cols(t, small[2])
                continue
            bad = None
            for i in range(t + 1, r):
                row = A[i]
                for j in range(t + 1, c):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1, t)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]


def left_kernel(M: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
    """Integer basis (as rows) of ``{x : x @ M == 0}``."""
    U, D, _ = smith_normal_form(M, cols)
    r = len(U)
    c = len(D[0]) if D else (cols or 0)
    rank = sum(1 for i in range(min(r, c)) if D[i][i])
    return [U[i] for i in range(rank, r)]


# ---------------------------------------------------------------------------
# groups

def _prime_powers(n: int) -> list[int]:
    return [p ** e for p, e in factorint(n).items()]


@dataclass(frozen=True, order=True)
class FiniteAbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``2 <= d_1 | d_2 | ... | d_k``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in t:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(t, t[1:]):
            if b % a:
                raise ValueError(f"invariant factors {t} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "FiniteAbelianGroup":
        """Normalize an arbitrary direct sum of cyclic groups; ``Z/0`` counts as ``Z``."""
        by_prime: dict[int, list[int]] = {}
        for n in orders:
            n = abs(int(n))
            if n == 0:
                free_rank += 1
                continue
            for p, e in factorint(n).items():
                by_prime.setdefault(p, []).append(e)
        return cls._from_prime_exponents(by_prime, free_rank)

    @classmethod
    def _from_prime_exponents(cls, by_prime: dict[int, list[int]], free_rank: int = 0):
        k = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * k
        for p, exps in by_prime.items():
            exps = sorted((e for e in exps if e > 0), reverse=True)
            for i, e in enumerate(exps):
                factors[k - 1 - i] *= p ** e
        return cls(free_rank, tuple(d for d in factors if d > 1))

    @classmethod
    def from_partitions(cls, parts: dict[int, Sequence[int]], free_rank: int = 0):
        """Build from ``{p: (a_1, a_2, ...)}`` meaning ``sum Z/p^a_i``."""
        return cls._from_prime_exponents({p: list(v) for p, v in parts.items()}, free_rank)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls.from_orders([n])

    @classmethod
    def power(cls, n: int, k: int) -> "FiniteAbelianGroup":
        return cls.from_orders([n] * k)

    @property
    def order(self) -> int:
        """Order of the torsion subgroup."""
        return math.prod(self.torsion)

    @property
    def exponent(self) -> int:
        return self.torsion[-1] if self.torsion else 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def torsion_subgroup(self) -> "FiniteAbelianGroup":
        return FiniteAbelianGroup(0, self.torsion)

    def primes(self) -> list[int]:
        return sorted(factorint(self.order)) if self.torsion else []

    def p_part(self, p: int) -> tuple[int, ...]:
        """Partition of the Sylow ``p``-subgroup, largest exponent first."""
        out = []
        for d in self.torsion:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                out.append(e)
        return tuple(sorted(out, reverse=True))

    def elementary_divisors(self) -> list[int]:
        return sorted(q for d in self.torsion for q in _prime_powers(d))

    def __add__(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        return FiniteAbelianGroup.from_orders(self.torsion + other.torsion,
                                              self.free_rank + other.free_rank)

    def __str__(self) -> str:
        if self.is_trivial():
            return "0"
        terms = []
        if self.free_rank:
            terms.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            d = self.torsion[i]
            k = self.torsion.count(d)
            terms.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
            i += k
        return " + ".join(terms)

    def torsion_str(self) -> str:
        return str(self.torsion_subgroup()) if self.torsion else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteAbelianGroup":
        return cls.from_orders(d.get("torsion", []), d.get("free_rank", 0))


TRIVIAL = FiniteAbelianGroup()


def cokernel(M: Sequence[Sequence[int]], cols: int | None = None) -> FiniteAbelianGroup:
    """``Z^cols / rowspace(M)``.  ``cols`` is required when ``M`` has no rows."""
    A, r, c = _as_matrix(M)
    if r == 0:
        return FiniteAbelianGroup(cols or 0)
    diag = invariant_factors(A)
    rank = sum(1 for d in diag if d)
    return FiniteAbelianGroup(c - rank, tuple(d for d in diag if d > 1))


def subgroup_generated(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> FiniteAbelianGroup:
    """Structure of the subgroup of ``sum Z/n_j`` generated by ``gens``."""
    k = len(moduli)
    if k == 0:
        return TRIVIAL
    N = [[n if i == j else 0 for j in range(k)] for i, n in enumerate(moduli)]
    rows = [list(g) for g in gens] + N
    _, D, V = smith_normal_form(rows)
    d = [D[i][i] for i in range(k)]
    # basis of L = rowspace(rows) is d_i * (row i of V^{-1}); express N in it
    coords = [[n * V[j][i] // d[i] for i in range(k)] for j, n in enumerate(moduli)]
    return cokernel(coords)


# ---------------------------------------------------------------------------
# p-groups: subgroup/quotient types via Littlewood--Richardson coefficients

def _lr_tableaux(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...],
                 first_only: bool) -> int:
    n = len(lam)
    mu = tuple(mu) + (0,) * (n - len(mu))
    if len(mu) > n or any(m > l for m, l in zip(mu, lam)):
        return 0
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    cells = [(i, j) for i in range(n) for j in range(lam[i] - 1, mu[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    found = 0

    def rec(k: int) -> bool:
        nonlocal found
        if k == len(cells):
            found += 1
            return first_only
        i, j = cells[k]
        hi = filling.get((i, j + 1), len(nu))
        lo = filling.get((i - 1, j), 0) + 1 if i > 0 and j >= mu[i - 1] else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            stop = rec(k + 1)
            del filling[(i, j)]
            counts[v] -= 1
            if stop:
                return True
        return False

    rec(0)
    return found


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Littlewood--Richardson coefficient ``c^lam_{mu,nu}``."""
    return _lr_tableaux(tuple(lam), tuple(mu), tuple(nu), first_only=False)


@lru_cache(maxsize=None)
def has_subgroup_with_quotient(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> bool:
    """Does a ``p``-group of type ``lam`` have a subgroup of type ``mu`` with quotient of type ``nu``?

    This holds iff the Hall polynomial is nonzero, iff ``c^lam_{mu,nu} > 0``;
    the answer does not depend on ``p``.
    """
    return _lr_tableaux(tuple(lam), tuple(mu), tuple(nu), first_only=True) > 0


def has_subgroup_with_quotient_group(G: FiniteAbelianGroup, H: FiniteAbelianGroup,
                                     Q: FiniteAbelianGroup) -> bool:
    if not (G.is_finite() and H.is_finite() and Q.is_finite()):
        raise ValueError("finite groups only")
    if H.order * Q.order != G.order:
        return False
    primes = set(G.primes()) | set(H.primes()) | set(Q.primes())
    return all(has_subgroup_with_quotient(G.p_part(p), H.p_part(p), Q.p_part(p)) for p in primes)


def is_quotient_of(G: FiniteAbelianGroup, Q: FiniteAbelianGroup) -> bool:
    """Is there a surjection ``G -> Q`` (both finite)?"""
    if G.order % Q.order:
        return False
    for p in set(G.primes()) | set(Q.primes()):
        lam, nu = G.p_part(p), Q.p_part(p)
        if len(nu) > len(lam) or any(a < b for a, b in zip(lam, nu)):
            return False
    return True


# ---------------------------------------------------------------------------
# admissible torsion shapes

@dataclass(frozen=True)
class Decomposition:
    subgroup: FiniteAbelianGroup
    quotient: FiniteAbelianGroup
    shapes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"subgroup": str(self.subgroup), "quotient": str(self.quotient),
                "shapes": list(self.shapes)}


@dataclass(frozen=True)
class AdmissibilityReport:
    group: FiniteAbelianGroup
    decompositions: tuple[Decomposition, ...] = field(default_factory=tuple)

    @property
    def admissible(self) -> bool:
        return bool(self.decompositions)

    def pairs(self) -> set[tuple[FiniteAbelianGroup, FiniteAbelianGroup]]:
        return {(d.subgroup, d.quotient) for d in self.decompositions}

    def to_dict(self) -> dict:
        return {"group": str(self.group), "admissible": self.admissible,
                "decompositions": [d.to_dict() for d in self.decompositions]}


def candidate_subgroups(order: int) -> dict[FiniteAbelianGroup, list[str]]:
    """All large-torsion shapes whose order divides ``order``, with their labels."""
    out: dict[FiniteAbelianGroup, list[str]] = {}

    def add(H, label):
        if order % H.order == 0:
            out.setdefault(H, []).append(label)

    m = 1
    while m * m <= order:
        add(FiniteAbelianGroup.power(m, 2), f"(Z/m)^2, m={m}")
        m += 1
    add(FiniteAbelianGroup.power(5, 4), "(Z/5)^4")
    add(FiniteAbelianGroup.power(4, 4), "(Z/4)^4")
    for n in (2, 3, 4):
        add(FiniteAbelianGroup.power(3, 2 * n), f"(Z/3)^{2 * n}")
    n = 1
    while 4 ** n <= order:
        add(FiniteAbelianGroup.power(2, 2 * n), f"(Z/2)^{2 * n}")
        n += 1
    return out


def allowed_quotients(order: int) -> list[FiniteAbelianGroup]:
    """Groups of the given order of the form ``Z/r``, ``Z/r+Z/2`` or ``Z/r+Z/3``."""
    out = [FiniteAbelianGroup.cyclic(order)]
    for s in (2, 3):
        if order % (s * s) == 0:
            out.append(FiniteAbelianGroup.from_orders([s, order // s]))
    return out


def is_allowed_quotient(Q: FiniteAbelianGroup) -> bool:
    return Q.is_finite() and (len(Q.torsion) <= 1 or (len(Q.torsion) == 2 and Q.torsion[0] in (2, 3)))


def classify_torsion_shape(G: FiniteAbelianGroup) -> AdmissibilityReport:
    """Every (subgroup shape, quotient) decomposition of a finite group ``G``.

    Works one prime at a time: for each candidate pair the Sylow parts are
    checked independently with :func:`has_subgroup_with_quotient`.
    """
    if not G.is_finite():
        raise ValueError("classify_torsion_shape needs a finite group (free rank 0)")
    found = []
    for H, labels in candidate_subgroups(G.order).items():
        for Q in allowed_quotients(G.order // H.order):
            if has_subgroup_with_quotient_group(G, H, Q):
                found.append(Decomposition(H, Q, tuple(labels)))
    found.sort(key=lambda d: (d.subgroup.order, d.subgroup.torsion, d.quotient.torsion))
    return AdmissibilityReport(G, tuple(found))


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All isomorphism types of abelian groups of order ``n``."""
    fac = factorint(n) if n > 1 else {}
    per_prime = [[(p, part) for part in partitions(e)] for p, e in fac.items()]
    out = []
    for combo in product(*per_prime):
        out.append(FiniteAbelianGroup.from_partitions(dict(combo)))
    return sorted(out)


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


# ---------------------------------------------------------------------------
# explicit elements of sum Z/n_j

def subgroup_elements(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> set[tuple[int, ...]]:
    """Element set of the subgroup of ``sum Z/n_j`` generated by ``gens``."""
    zero = tuple(0 for _ in moduli)
    elems = {zero}
    for g in gens:
        g = tuple(x % n for x, n in zip(g, moduli))
        if g in elems:
            continue
        new = set(elems)
        cur = g
        while cur not in elems:
            new |= {tuple((a + b) % n for a, b, n in zip(e, cur, moduli)) for e in elems}
            cur = tuple((a + b) % n for a, b, n in zip(cur, g, moduli))
        elems = new
    return elems


def element_order(x: Sequence[int], moduli: Sequence[int]) -> int:
    o = 1
    for a, n in zip(x, moduli):
        o = math.lcm(o, n // math.gcd(a % n, n))
    return o


def all_subgroups(moduli: Sequence[int]) -> list[frozenset[tuple[int, ...]]]:
    """Every subgroup of ``sum Z/n_j`` as an element set (small groups only)."""
    elements = list(product(*(range(n) for n in moduli)))
    zero = tuple(0 for _ in moduli)
    seen = {frozenset([zero])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for S in frontier:
            for g in elements:
                if g in S:
                    continue
                T = frozenset(subgroup_elements(list(S) + [g], moduli))
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return sorted(seen, key=len)


def group_of_elements(S: Iterable[Sequence[int]], moduli: Sequence[int]) -> FiniteAbelianGroup:
    """Isomorphism type of a finite subgroup given by its element set."""
    return subgroup_generated([list(s) for s in S], moduli)
