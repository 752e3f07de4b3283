"""Homology of links of Brieskorn--Pham singularities.

For ``f = x_1^{a_1} + ... + x_n^{a_n}`` the Milnor fibre has middle homology
``Z^mu`` with ``mu = prod(a_i - 1)`` and, in the Pham basis, the monodromy is
the tensor product of the companion matrices of ``1 + t + ... + t^{a_i - 1}``.
The Wang sequence then gives ``H_{n-2}(L) = coker(I - h)`` for the link ``L``;
with ``n = 4`` that is ``H_2`` of the 5-dimensional link.

This path never looks at a surface, so it is an independent check of the
Seifert-side torsion formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .abelian import FiniteAbelianGroup, cokernel, determinant, invariant_factors


@dataclass(frozen=True)
class BPExponents:
    """Exponents of ``sum x_i^{a_i}``, with optional weights/degree metadata."""

    exponents: tuple[int, ...]
    weights: tuple[int, ...] | None = None
    degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if not self.exponents:
            raise ValueError("need at least one exponent")
        if any(a < 2 for a in self.exponents):
            raise ValueError(f"exponents must be >= 2, got {self.exponents}")
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            object.__setattr__(self, "weights", w)
            if len(w) != len(self.exponents):
                raise ValueError("weights and exponents differ in length")
            if self.degree is None:
                raise ValueError("weights given without a degree")
            bad = [i for i, (a, wi) in enumerate(zip(self.exponents, w)) if a * wi != self.degree]
            if bad:
                raise ValueError(f"a_i * w_i != degree for indices {bad}")

    @classmethod
    def from_weights(cls, weights: Sequence[int], degree: int) -> "BPExponents":
        exps = []
        for w in weights:
            if degree % w:
                raise ValueError(f"weight {w} does not divide degree {degree}")
            exps.append(degree // w)
        return cls(tuple(exps), tuple(weights), degree)


def milnor_number(e: BPExponents) -> int:
    return math.prod(a - 1 for a in e.exponents)


def companion(a: int) -> list[list[int]]:
    """Companion matrix of ``1 + t + ... + t^{a-1}`` (size ``a - 1``)."""
    n = a - 1
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = -1
    return C


def kron(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    rb, cb = len(B), len(B[0])
    out = [[0] * (len(A[0]) * cb) for _ in range(len(A) * rb)]
    for i, row in enumerate(A):
        for j, a in enumerate(row):
            if not a:
                continue
            for k in range(rb):
                dst = out[i * rb + k]
                src = B[k]
                for l in range(cb):
                    dst[j * cb + l] = a * src[l]
    return out


def monodromy(e: BPExponents) -> list[list[int]]:
    h = [[1]]
    for a in e.exponents:
        h = kron(h, companion(a))
    return h


def wang_matrix(e: BPExponents) -> list[list[int]]:
    """``I - h`` on the middle homology of the Milnor fibre."""
    h = monodromy(e)
    return [[int(i == j) - x for j, x in enumerate(row)] for i, row in enumerate(h)]


def link_homology(e: BPExponents) -> FiniteAbelianGroup:
    """``coker(I - h)``: the homology of the link in degree ``n - 2``."""
    return cokernel(wang_matrix(e))


def link_h2(e: BPExponents) -> FiniteAbelianGroup:
    if len(e.exponents) != 4:
        raise ValueError("link_h2 is for 4-variable polynomials (5-dimensional links)")
    return link_homology(e)


def wang_determinant(e: BPExponents) -> int:
    return determinant(wang_matrix(e))


def characteristic_zero_count(e: BPExponents) -> int:
    """Number of ``(k_1..k_n)``, ``0 < k_i < a_i``, with ``sum k_i/a_i`` integral.

    This is the multiplicity of the eigenvalue 1 of ``h`` and hence the
    expected free rank; it is a cheap cross-check on :func:`link_homology`.
    """
    from itertools import product
    from fractions import Fraction

    count = 0
    for ks in product(*(range(1, a) for a in e.exponents)):
        if sum(Fraction(k, a) for k, a in zip(ks, e.exponents)).denominator == 1:
            count += 1
    return count


@dataclass(frozen=True)
class CrossCheck:
    exponents: tuple[int, ...]
    link_torsion: FiniteAbelianGroup
    seifert_torsion: FiniteAbelianGroup

    @property
    def agree(self) -> bool:
        return self.link_torsion == self.seifert_torsion

    def to_dict(self) -> dict:
        return {"exponents": list(self.exponents), "agree": self.agree,
                "link_torsion": str(self.link_torsion),
                "seifert_torsion": str(self.seifert_torsion)}


def cross_check(e: BPExponents, y) -> CrossCheck:
    """Compare ``tors coker(I - h)`` with the Seifert-side ``tors H_2``."""
    from .seifert import tors_h2

    link = link_h2(e).torsion_subgroup()
    return CrossCheck(e.exponents, link, tors_h2(y).group)


__all__ = ["BPExponents", "milnor_number", "link_h2", "link_homology", "cross_check",
           "monodromy", "wang_matrix", "wang_determinant", "invariant_factors"]
