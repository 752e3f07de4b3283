"""Finite monomial matrix groups, enough to take orders and abelianizations."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..abelian import FiniteAbelianGroup

# (perm, exps): e_j -> zeta^exps[j] e_perm[j]
Element = tuple[tuple[int, ...], tuple[int, ...]]


def compose(g: Element, h: Element, N: int) -> Element:
    """``g o h``."""
    (s, a), (t, b) = g, h
    return tuple(s[t[j]] for j in range(len(t))), tuple((b[j] + a[t[j]]) % N for j in range(len(t)))


def inverse(g: Element, N: int) -> Element:
    s, a = g
    n = len(s)
    inv = [0] * n
    for j in range(n):
        inv[s[j]] = j
    # g^{-1}(e_{s(j)}) = zeta^{-a_j} e_j
    return tuple(inv), tuple((-a[inv[k]]) % N for k in range(n))


@dataclass(frozen=True)
class MonomialGroup:
    name: str
    generators: tuple[Element, ...]
    N: int
    stated_order: int | None = None
    projective: bool = False

    @property
    def dim(self) -> int:
        return len(self.generators[0][0])

    def identity(self) -> Element:
        return tuple(range(self.dim)), (0,) * self.dim

    def closure(self, gens) -> frozenset[Element]:
        seen = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = compose(g, x, self.N)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    @property
    def elements(self) -> frozenset[Element]:
        return _elements(self)

    def scalars(self) -> frozenset[Element]:
        """Elements acting trivially on projective space, if the group is taken projectively."""
        if not self.projective:
            return frozenset([self.identity()])
        ident = tuple(range(self.dim))
        return frozenset(g for g in self.elements if g[0] == ident and len(set(g[1])) == 1)

    @property
    def order(self) -> int:
        return len(self.elements) // len(self.scalars())

    def is_abelian(self) -> bool:
        Z = self.scalars()
        gs = self.generators
        for g in gs:
            for h in gs:
                c = compose(compose(g, h, self.N), inverse(compose(h, g, self.N), self.N), self.N)
                if c not in Z:
                    return False
        return True

    def commutator_subgroup(self) -> frozenset[Element]:
        els = list(self.elements)
        comms = set()
        for g in els:
            gi = inverse(g, self.N)
            for h in els:
                comms.add(compose(compose(g, h, self.N), compose(gi, inverse(h, self.N), self.N), self.N))
        return self.closure(list(comms) + list(self.scalars()))

    def abelianization(self) -> FiniteAbelianGroup:
        C = self.commutator_subgroup()
        cosets: dict[frozenset, Element] = {}
        for g in self.elements:
            key = frozenset(compose(g, c, self.N) for c in C)
            cosets.setdefault(key, g)
        ident = frozenset(C)

        def coset_order(g):
            k, x = 1, g
            while frozenset(compose(x, c, self.N) for c in C) != ident:
                x = compose(g, x, self.N)
                k += 1
            return k

        orders = [coset_order(g) for g in cosets.values()]
        return group_from_element_orders(orders)


@lru_cache(maxsize=None)
def _elements(G: MonomialGroup) -> frozenset[Element]:
    return G.closure(G.generators)


def group_from_element_orders(orders: list[int]) -> FiniteAbelianGroup:
    """Isomorphism type of a finite abelian group from the multiset of element orders.

    ``|G[p^k]| = p^(sum_i min(lambda_i, k))`` recovers each partition ``lambda``.
    """
    n = len(orders)
    parts: dict[int, list[int]] = {}
    from sympy import factorint

    for p in factorint(n):
        counts = [1]
        k = 1
        while True:
            c = sum(1 for o in orders if (p ** k) % o == 0)
            counts.append(c)
            if c == counts[-2] and k > 1:
                break
            k += 1
        at_least = []  # number of parts >= k
        for k in range(1, len(counts)):
            r = round(math.log(counts[k] // counts[k - 1], p)) if counts[k] > counts[k - 1] else 0
            at_least.append(r)
        lam = []
        for k, r in enumerate(at_least, start=1):
            nxt = at_least[k] if k < len(at_least) else 0
            lam += [k] * (r - nxt)
        parts[p] = sorted(lam, reverse=True)
    return FiniteAbelianGroup.from_partitions(parts)


@lru_cache(maxsize=None)
def load_groups() -> dict[str, MonomialGroup]:
    data = json.loads(resources.files(__package__).joinpath("data", "groups.json").read_text())
    out = {}
    for name, g in data["groups"].items():
        gens = tuple((tuple(p), tuple(e)) for p, e in g["generators"])
        out[name] = MonomialGroup(name, gens, g["roots_of_unity"], g["order"], g.get("projective", False))
    return out
