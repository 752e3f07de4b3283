"""Brute-force oracles used by the tests.  Nothing here calls into sasaki5."""
from __future__ import annotations

from functools import lru_cache
from itertools import product


def p_group_types(n: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` (exponent types of abelian p-groups of order ``p^n``)."""
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rest, largest), 0, -1):
            rec(rest - k, k, acc + [k])
    rec(n, n, [])
    return out


def type_from_counts(p: int, counts: list[int]) -> tuple[int, ...]:
    """``counts[k] = |X[p^k]|``; returns the partition of ``X``."""
    at_least = []
    for k in range(1, len(counts)):
        r, q = 0, counts[k] // counts[k - 1]
        while q > 1:
            q //= p
            r += 1
        at_least.append(r)
    lam = []
    for k, r in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        lam += [k] * (r - nxt)
    return tuple(sorted(lam, reverse=True))


@lru_cache(maxsize=None)
def subgroup_types(p: int, lam: tuple[int, ...]) -> frozenset[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (subgroup type, quotient type) pairs of ``sum Z/p^lam_i``, by listing every subgroup.

    Elements are integers in mixed radix; subgroups are bitmasks.  Subgroups
    of order ``p^{k+1}`` are built as ``S + <g>`` with ``S`` of order ``p^k``
    and ``p g`` in ``S``.
    """
    moduli = [p ** a for a in lam]
    elems = list(product(*(range(m) for m in moduli)))
    index = {e: i for i, e in enumerate(elems)}
    N = len(elems)

    def add(i, j):
        return index[tuple((a + b) % m for a, b, m in zip(elems[i], elems[j], moduli))]

    table = [[add(i, j) for j in range(N)] for i in range(N)]
    times = [[0] * N]
    for k in range(1, max(lam, default=0) + 1):
        times.append([index[tuple((p ** k * a) % m for a, m in zip(e, moduli))] for e in elems])
    ptimes = [index[tuple((p * a) % m for a, m in zip(e, moduli))] for e in elems]
    top = max(lam, default=0)
    torsion_masks = [sum(1 << i for i in range(N) if times[k][i] == 0) if k else 1 for k in range(top + 1)]

    def members(mask):
        return [i for i in range(N) if mask >> i & 1]

    level = {1}  # the trivial subgroup
    all_subs = {1}
    while level:
        nxt = set()
        for S in level:
            mem = members(S)
            covered = S
            for g in range(N):
                if covered >> g & 1 or not (S >> ptimes[g] & 1):
                    continue
                T = S
                x = g
                for _ in range(p - 1):
                    for s in mem:
                        T |= 1 << table[s][x]
                    x = table[x][g]
                covered |= T
                nxt.add(T)
        nxt -= all_subs
        all_subs |= nxt
        level = nxt

    out = set()
    for T in all_subs:
        size = bin(T).count("1")
        sub_counts = [bin(T & torsion_masks[k]).count("1") for k in range(top + 1)]
        # |(G/T)[p^k]| = #{x : p^k x in T} / |T|
        quo_counts = [1] + [sum(1 for i in range(N) if T >> times[k][i] & 1) // size for k in range(1, top + 1)]
        out.add((type_from_counts(p, sub_counts), type_from_counts(p, quo_counts)))
    return frozenset(out)


def factor(n: int) -> dict[int, int]:
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def groups_of_order(n: int) -> list[dict[int, tuple[int, ...]]]:
    """Abelian groups of order ``n`` as ``{p: partition}``."""
    fac = factor(n)
    per = [[(p, lam) for lam in p_group_types(e)] for p, e in fac.items()]
    return [dict(c) for c in product(*per)]


def invariant_factors(parts: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    depth = max((len(l) for l in parts.values()), default=0)
    out = []
    for i in range(depth):
        d = 1
        for p, lam in parts.items():
            if i < len(lam):
                d *= p ** lam[i]
        out.append(d)
    return tuple(sorted(out))


def parts_of(orders: list[int]) -> dict[int, tuple[int, ...]]:
    """``{p: partition}`` of ``sum Z/n`` over the given orders."""
    out: dict[int, list[int]] = {}
    for n in orders:
        for p, e in factor(n).items():
            out.setdefault(p, []).append(e)
    return {p: tuple(sorted(v, reverse=True)) for p, v in out.items()}


def shape_candidates(order: int) -> list[tuple[int, ...]]:
    """Subgroup shapes as lists of cyclic orders: (Z/m)^2, (Z/5)^4, (Z/4)^4, (Z/3)^{2n} (n <= 4), (Z/2)^{2n}."""
    out = set()
    m = 1
    while m * m <= order:
        out.add((m, m) if m > 1 else ())
        m += 1
    out.add((5,) * 4)
    out.add((4,) * 4)
    for n in (1, 2, 3, 4):
        out.add((3,) * (2 * n))
    n = 1
    while 4 ** n <= order:
        out.add((2,) * (2 * n))
        n += 1
    return [s for s in out if order % _prod(s) == 0]


def quotient_candidates(order: int) -> list[tuple[int, ...]]:
    out = [(order,) if order > 1 else ()]
    for s in (2, 3):
        if order % (s * s) == 0:
            out.append((s, order // s))
    return out


def _prod(xs) -> int:
    r = 1
    for x in xs:
        r *= x
    return r


def brute_force_pairs(parts: dict[int, tuple[int, ...]]) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(subgroup, quotient) as invariant-factor tuples, for every admissible decomposition."""
    order = _prod(p ** sum(l) for p, l in parts.items())
    found = set()
    for H in shape_candidates(order):
        for Q in quotient_candidates(order // _prod(H)):
            hp, qp = parts_of(list(H)), parts_of(list(Q))
            ok = all((hp.get(p, ()), qp.get(p, ())) in subgroup_types(p, parts.get(p, ()))
                     for p in set(parts) | set(hp) | set(qp))
            if ok:
                found.add((invariant_factors(hp), invariant_factors(qp)))
    return found


def determinant(M) -> int:
    """Gaussian elimination over Q."""
    from fractions import Fraction
    A = [[Fraction(x) for x in r] for r in M]
    n, d = len(A), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            for k in range(c, n):
                A[r][k] -= f * A[c][k]
    return int(d)
