"""Rational surfaces with cyclic quotient singularities, numerically.

A :class:`SurfaceModel` records a generating set of the Weil group (with
optional relations, so torsion is allowed), the rational intersection pairing
on those generators, the canonical class, and for each singular point the
local class group ``Z/n`` together with the image of every generator in it.
Everything that follows -- Weil/Pic, smoothness of Seifert bundles, log Del
Pezzo tests -- is computed from that data.

Weighted blow-ups ``B_{m_1...m_k} T`` follow the conventions

    K_S = pi^* K_T + sum m_i E_i,   E_i^2 = -1/m_i,   E_i . E_j = 0,   E_i . pi^* D = 0,

with ``E_i`` generating the local class group ``Z/m_i`` of the new point.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .abelian import (FiniteAbelianGroup, TRIVIAL, cokernel, left_kernel,
                      smith_normal_form, subgroup_generated)


class SurfaceError(ValueError):
    pass


class DataNotEncoded(SurfaceError):
    """Raised for catalog surfaces that only carry metadata."""


# ---------------------------------------------------------------------------
# classes

@dataclass(frozen=True)
class WeilClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "WeilClass") -> "WeilClass":
        _same_len(self.coeffs, other.coeffs)
        return WeilClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeilClass") -> "WeilClass":
        return self + (-other)

    def __neg__(self) -> "WeilClass":
        return WeilClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "WeilClass":
        return WeilClass(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class MarkedCurve:
    genus: int
    multiplicity: int


@dataclass(frozen=True)
class QDivisor:
    """``sum c_k D_k`` with exact rational coefficients."""

    terms: tuple[tuple[WeilClass, Fraction], ...]
    marked: tuple[MarkedCurve | None, ...] = ()

    def __post_init__(self):
        terms = tuple((t if isinstance(t, WeilClass) else WeilClass(t), Fraction(c))
                      for t, c in self.terms)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms) -> "QDivisor":
        return cls(tuple(terms))

    def vector(self, size: int | None = None) -> tuple[Fraction, ...]:
        if not self.terms:
            if size is None:
                raise SurfaceError("empty QDivisor needs an explicit basis size")
            return (Fraction(0),) * size
        n = len(self.terms[0][0])
        if size is not None and size != n:
            raise SurfaceError(f"basis size mismatch: {n} != {size}")
        out = [Fraction(0)] * n
        for cls_, c in self.terms:
            _same_len(cls_.coeffs, out)
            for i, a in enumerate(cls_.coeffs):
                out[i] += c * a
        return tuple(out)


def _same_len(a, b):
    if len(a) != len(b):
        raise SurfaceError(f"basis mismatch: {len(a)} vs {len(b)} coefficients")


def _vec(S: "SurfaceModel", X) -> tuple[Fraction, ...]:
    if isinstance(X, WeilClass):
        v = tuple(Fraction(c) for c in X.coeffs)
    elif isinstance(X, QDivisor):
        v = X.vector(S.rank)
    else:
        v = tuple(Fraction(c) for c in X)
    if len(v) != S.rank:
        raise SurfaceError(f"class has {len(v)} coefficients, {S.name} has basis of size {S.rank}")
    return v


# ---------------------------------------------------------------------------
# the model

@dataclass(frozen=True)
class SingularPoint:
    name: str
    order: int
    restriction: tuple[int, ...]
    kind: str = ""

    def local_class(self, coeffs: Sequence[int]) -> int:
        return sum(a * r for a, r in zip(coeffs, self.restriction)) % self.order

    def to_dict(self) -> dict:
        return {"name": self.name, "order": self.order, "kind": self.kind,
                "restriction": list(self.restriction)}


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    kind: str
    basis: tuple[str, ...]
    pairing: tuple[tuple[Fraction, ...], ...]
    canonical: tuple[int, ...]
    relations: tuple[tuple[int, ...], ...] = ()
    sing_points: tuple[SingularPoint, ...] = ()
    curves: tuple[tuple[str, tuple[int, ...]], ...] = ()
    generator: tuple[int, ...] | None = None
    family: tuple[str, tuple[int, ...]] | None = None
    params: tuple = ()
    encoded: bool = True

    def __post_init__(self):
        n = len(self.basis)
        P = tuple(tuple(Fraction(x) for x in row) for row in self.pairing)
        object.__setattr__(self, "pairing", P)
        if len(P) != n or any(len(r) != n for r in P):
            raise SurfaceError(f"{self.name}: pairing is not {n}x{n}")
        for i in range(n):
            for j in range(i):
                if P[i][j] != P[j][i]:
                    raise SurfaceError(f"{self.name}: pairing not symmetric at ({i},{j})")
        if len(self.canonical) != n:
            raise SurfaceError(f"{self.name}: canonical class has wrong length")
        for rel in self.relations:
            if any(v != 0 for v in _pair_vec(P, rel)):
                raise SurfaceError(f"{self.name}: relation {rel} is not numerically trivial")
            for p in self.sing_points:
                if p.local_class(rel):
                    raise SurfaceError(f"{self.name}: relation {rel} restricts nontrivially at {p.name}")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def cls(self, *coeffs, **named) -> WeilClass:
        """Build a class from positional coefficients or basis names."""
        if coeffs and named:
            raise SurfaceError("give coefficients positionally or by name, not both")
        if named:
            v = [0] * self.rank
            for k, c in named.items():
                v[self.basis.index(k)] = c
            return WeilClass(tuple(v))
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        return WeilClass(coeffs)

    def K(self) -> WeilClass:
        return WeilClass(self.canonical)

    def curve(self, name: str) -> WeilClass:
        for n, v in self.curves:
            if n == name:
                return WeilClass(v)
        raise KeyError(name)

    def require_encoded(self):
        if not self.encoded:
            raise DataNotEncoded(f"{self.name}: lattice data not encoded (metadata-only catalog row)")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "basis": list(self.basis),
            "pairing": [[str(x) for x in row] for row in self.pairing],
            "canonical": list(self.canonical),
            "relations": [list(r) for r in self.relations],
            "sing_points": [p.to_dict() for p in self.sing_points],
            "curves": {n: list(v) for n, v in self.curves},
        }


def _pair_vec(P, v) -> list[Fraction]:
    return [sum(Fraction(a) * P[i][j] for i, a in enumerate(v)) for j in range(len(P))]


# ---------------------------------------------------------------------------
# operations

def intersect(S: SurfaceModel, A, B) -> Fraction:
    S.require_encoded()
    a, b = _vec(S, A), _vec(S, B)
    P = S.pairing
    return sum((a[i] * P[i][j] * b[j] for i in range(S.rank) for j in range(S.rank) if a[i] and b[j]),
               Fraction(0))


def canonical_class(S: SurfaceModel) -> WeilClass:
    return S.K()


def self_intersection_K(S: SurfaceModel) -> Fraction:
    return intersect(S, S.K(), S.K())


def genus(S: SurfaceModel, D) -> int:
    """Arithmetic genus from ``2g - 2 = D.(D + K)``."""
    DK = tuple(x + k for x, k in zip(_vec(S, D), S.canonical))
    two_g_minus_2 = intersect(S, D, DK)
    g = (two_g_minus_2 + 2) / 2
    if g.denominator != 1:
        raise SurfaceError(f"D.(D+K) = {two_g_minus_2} gives non-integral genus {g}; not a curve avoiding the singular points")
    return int(g)


def d_invariant(S: SurfaceModel) -> int:
    """``gcd(m_1, ..., m_k, d(T))`` for ``S = B_{m_1...m_k} T``."""
    if S.family is None:
        raise SurfaceError(f"{S.name} is not T or B_m T for T in {sorted(FAMILY_BASES)}")
    base, weights = S.family
    return math.gcd(FAMILY_BASES[base][1], *weights)


def anticanonical_index(S: SurfaceModel) -> int:
    """Largest ``d`` with ``-K = d * (Weil class)`` when Weil is free."""
    if S.relations:
        raise SurfaceError(f"{S.name}: Weil group has relations; index is not read off coefficients")
    return math.gcd(*S.canonical)


@dataclass(frozen=True)
class AmplenessCertificate:
    ample: bool
    residual: tuple[Fraction, ...]
    self_intersection: Fraction
    violating_curve: str | None = None
    violating_value: Fraction | None = None

    def __bool__(self):
        return self.ample

    def to_dict(self) -> dict:
        return {"ample": self.ample, "residual": [str(x) for x in self.residual],
                "self_intersection": str(self.self_intersection),
                "violating_curve": self.violating_curve,
                "violating_value": None if self.violating_value is None else str(self.violating_value)}


def is_ample(S: SurfaceModel, L) -> AmplenessCertificate:
    """Nakai-type test against the model's curated curve list."""
    if not S.curves:
        raise SurfaceError(f"{S.name}: no effective curve generators recorded")
    v = _vec(S, L)
    for name, c in S.curves:
        val = intersect(S, v, c)
        if val <= 0:
            return AmplenessCertificate(False, v, intersect(S, v, v), name, val)
    sq = intersect(S, v, v)
    return AmplenessCertificate(sq > 0, v, sq, None if sq > 0 else "self-intersection",
                                None if sq > 0 else sq)


def is_log_del_pezzo(S: SurfaceModel, delta=None) -> AmplenessCertificate:
    """Is ``-(K_S + delta)`` ample?  ``delta`` defaults to 0."""
    d = (Fraction(0),) * S.rank if delta is None else _vec(S, delta)
    if isinstance(delta, QDivisor):
        for _, c in delta.terms:
            if not 0 <= c < 1:
                raise SurfaceError(f"boundary coefficient {c} not in [0, 1)")
    residual = tuple(-(k + x) for k, x in zip(S.canonical, d))
    return is_ample(S, residual)


def weil_group(S: SurfaceModel) -> FiniteAbelianGroup:
    return cokernel([list(r) for r in S.relations], cols=S.rank)


def local_classes(S: SurfaceModel, D) -> tuple[int, ...]:
    coeffs = D.coeffs if isinstance(D, WeilClass) else tuple(D)
    return tuple(p.local_class(coeffs) for p in S.sing_points)


def non_generated_points(S: SurfaceModel, D) -> list[SingularPoint]:
    """Singular points whose local class group is not generated by ``D``."""
    S.require_encoded()
    coeffs = D.coeffs if isinstance(D, WeilClass) else tuple(D)
    return [p for p in S.sing_points if math.gcd(p.local_class(coeffs), p.order) != 1]


def weil_mod_pic(S: SurfaceModel) -> FiniteAbelianGroup:
    """Image of ``Weil(S)`` in the sum of local class groups."""
    S.require_encoded()
    if not S.sing_points:
        return TRIVIAL
    moduli = [p.order for p in S.sing_points]
    gens = [[p.restriction[i] for p in S.sing_points] for i in range(S.rank)]
    return subgroup_generated(gens, moduli)


def local_class_group_orders(S: SurfaceModel) -> list[int]:
    return [p.order for p in S.sing_points]


def pic_lattice(S: SurfaceModel) -> list[tuple[int, ...]]:
    """Basis (in ``Z^basis``) of the Cartier classes: zero in every local class group."""
    S.require_encoded()
    k = len(S.sing_points)
    if k == 0:
        return [tuple(int(i == j) for j in range(S.rank)) for i in range(S.rank)]
    rows = [[p.restriction[i] for p in S.sing_points] for i in range(S.rank)]
    rows += [[-p.order if j == i else 0 for j in range(k)] for i, p in enumerate(S.sing_points)]
    K = left_kernel(rows)
    return [tuple(v[:S.rank]) for v in K if any(v[:S.rank])]


def h2_restriction_index(S: SurfaceModel, D) -> int:
    """Index ``d`` with ``image[H^2(S,Z) -> H^2(D,Z)] = d * H^2(D,Z)``.

    Cartier classes restrict to ``D`` with degree ``D . x``; the image is
    generated by these degrees.
    """
    degs = []
    for x in pic_lattice(S):
        val = intersect(S, D, x)
        if val.denominator != 1:
            raise SurfaceError(f"Cartier class {x} meets D non-integrally ({val})")
        degs.append(int(val))
    return math.gcd(*degs) if degs else 0


# ---------------------------------------------------------------------------
# constructions

def projective_plane() -> SurfaceModel:
    return SurfaceModel("P^2", "ProjectivePlane", ("H",), ((1,),), (-3,),
                        curves=(("H", (1,)),), generator=(1,), family=("P2", ()))


def quadric() -> SurfaceModel:
    return SurfaceModel("P^1xP^1", "Quadric", ("F1", "F2"), ((0, 1), (1, 0)), (-2, -2),
                        curves=(("F1", (1, 0)), ("F2", (0, 1))), generator=(1, 1),
                        family=("P1xP1", ()))


def hirzebruch(n: int) -> SurfaceModel:
    if n < 0:
        raise SurfaceError("Hirzebruch index must be >= 0")
    return SurfaceModel(f"F_{n}", "Hirzebruch", ("E", "F"), ((-n, 1), (1, 0)), (-2, -(n + 2)),
                        curves=(("E", (1, 0)), ("F", (0, 1))), params=(n,))


def weighted_p2(a: int, b: int, c: int, name: str | None = None) -> SurfaceModel:
    """``P(a,b,c)`` with pairwise coprime weights; ``H = O(1)``, ``H^2 = 1/abc``."""
    w = (a, b, c)
    if min(w) < 1 or any(math.gcd(x, y) != 1 for x, y in ((a, b), (a, c), (b, c))):
        raise SurfaceError(f"P{w}: weights must be positive and pairwise coprime")
    pts = []
    coords = "xyz"
    for i, wi in enumerate(w):
        if wi > 1:
            others = tuple(x for j, x in enumerate(w) if j != i)
            pts.append(SingularPoint(f"P_{coords[i]}", wi, (1,), f"1/{wi}({others[0] % wi},{others[1] % wi})"))
    name = name or f"P({a},{b},{c})"
    fam = {(1, 2, 3): "P(1,2,3)", (1, 1, 2): "Q"}.get(tuple(sorted(w)))
    return SurfaceModel(name, "WeightedP2", ("H",), ((Fraction(1, a * b * c),),), (-(a + b + c),),
                        sing_points=tuple(pts), curves=(("H", (1,)),), generator=(1,),
                        family=(fam, ()) if fam else None, params=w)


def quadric_cone() -> SurfaceModel:
    return weighted_p2(1, 1, 2, name="Q")


def s5() -> SurfaceModel:
    """Degree 5 Del Pezzo with one ``A_4`` point: ``Weil = Z H``, ``H^2 = 1/5``, ``-K = 5H``."""
    return SurfaceModel("S_5", "DelPezzoA4", ("H",), ((Fraction(1, 5),),), (-5,),
                        sing_points=(SingularPoint("p", 5, (1,), "A4"),),
                        curves=(("H", (1,)),), generator=(1,), family=("S5", ()))


def p123() -> SurfaceModel:
    return weighted_p2(1, 2, 3)


# name -> (constructor, d(T))
FAMILY_BASES: dict[str, tuple] = {
    "P1xP1": (quadric, 2),
    "P2": (projective_plane, 3),
    "Q": (quadric_cone, 4),
    "S5": (s5, 5),
    "P(1,2,3)": (p123, 6),
}


def family_base(name: str) -> SurfaceModel:
    return FAMILY_BASES[name][0]()


def blow_up(S: SurfaceModel, weights: Sequence[int]) -> SurfaceModel:
    """Weighted blow-ups at general smooth points."""
    S.require_encoded()
    weights = tuple(int(m) for m in weights)
    if any(m < 1 for m in weights):
        raise SurfaceError("blow-up weights must be >= 1")
    n0, k = S.rank, len(weights)
    start = sum(1 for b in S.basis if re.fullmatch(r"E\d+", b))
    new_names = tuple(f"E{start + i + 1}" for i in range(k))
    basis = S.basis + new_names
    P = [list(r) + [Fraction(0)] * k for r in S.pairing]
    for i, m in enumerate(weights):
        row = [Fraction(0)] * (n0 + k)
        row[n0 + i] = Fraction(-1, m)
        P.append(row)
    canonical = S.canonical + weights
    pts = [replace(p, restriction=p.restriction + (0,) * k) for p in S.sing_points]
    for i, m in enumerate(weights):
        if m > 1:
            r = [0] * (n0 + k)
            r[n0 + i] = 1
            pts.append(SingularPoint(f"q_{new_names[i]}", m, tuple(r), f"A{m - 1}"))
    curves = [(n, tuple(v) + (0,) * k) for n, v in S.curves]
    curves += [(new_names[i], tuple(int(j == n0 + i) for j in range(n0 + k))) for i in range(k)]
    family = None
    if S.family is not None:
        family = (S.family[0], tuple(sorted(S.family[1] + weights, reverse=True)))
    gen = S.generator + (0,) * k if S.generator is not None else None
    label = family_name(*family) if family else f"B_{{{''.join(map(str, weights))}}}{S.name}"
    return SurfaceModel(label, "WeightedBlowup", basis, tuple(tuple(r) for r in P), canonical,
                        tuple(r + (0,) * k for r in S.relations), tuple(pts), tuple(curves),
                        gen, family, params=(S.name, weights))


def family_surface(base: str, weights: Sequence[int] = ()) -> SurfaceModel:
    S = family_base(base)
    weights = tuple(sorted(weights, reverse=True))
    return blow_up(S, weights) if weights else S


_BASE_LABELS = {"P2": "P^2", "P1xP1": "P^1xP^1", "Q": "Q", "S5": "S_5", "P(1,2,3)": "P(1,2,3)"}


def family_name(base: str, weights: Sequence[int]) -> str:
    b = _BASE_LABELS[base]
    if not weights:
        return b
    ws = sorted(weights, reverse=True)
    sep = "," if any(w > 9 for w in ws) else ""
    return f"B_{{{sep.join(map(str, ws))}}}{b}"


_BASE_ALIASES = {
    "P2": "P2", "P^2": "P2", "\\p^2": "P2",
    "P1xP1": "P1xP1", "P^1xP^1": "P1xP1", "\\p^1\\times\\p^1": "P1xP1", "P1×P1": "P1xP1",
    "Q": "Q", "S5": "S5", "S_5": "S5", "P(1,2,3)": "P(1,2,3)", "\\p(1,2,3)": "P(1,2,3)",
}


def parse_family_name(text: str) -> tuple[str, tuple[int, ...]]:
    """``"B_{3111}P^2"`` -> ``("P2", (3, 1, 1, 1))``."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"B_?\{?([\d,]+)\}?(.+)", t)
    if m:
        w, base = m.group(1), m.group(2)
        weights = tuple(int(x) for x in (w.split(",") if "," in w else w))
    else:
        base, weights = t, ()
    if base not in _BASE_ALIASES:
        raise SurfaceError(f"unknown base surface {base!r} in {text!r}")
    return _BASE_ALIASES[base], tuple(sorted(weights, reverse=True))


def surface_from_name(text: str) -> SurfaceModel:
    t = text.replace(" ", "")
    m = re.fullmatch(r"F_?(\d+)", t)
    if m:
        return hirzebruch(int(m.group(1)))
    m = re.fullmatch(r"P\((\d+),(\d+),(\d+)\)", t)
    if m and t != "P(1,2,3)":
        return weighted_p2(*map(int, m.groups()))
    return family_surface(*parse_family_name(t))


def surface_from_spec(spec) -> SurfaceModel:
    """Build a model from the JSON-compatible schema (see ``docs/formats.md``)."""
    if isinstance(spec, str):
        if spec.startswith("catalog:"):
            from .catalog import catalog_surface
            return catalog_surface(spec.split(":", 1)[1])
        return surface_from_name(spec)
    if not isinstance(spec, Mapping) or "kind" not in spec:
        raise SurfaceError("surface input must be a name or an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "ProjectivePlane":
        S = projective_plane()
    elif kind == "Quadric":
        S = quadric()
    elif kind == "Hirzebruch":
        S = hirzebruch(int(spec["n"]))
    elif kind == "WeightedP2":
        S = weighted_p2(*map(int, spec["weights"]))
    elif kind == "QuadricCone":
        S = quadric_cone()
    elif kind == "S5":
        S = s5()
    elif kind == "WeightedBlowup":
        base = surface_from_spec(spec["base"])
        return blow_up(base, spec["weights"])
    elif kind == "CatalogSurface":
        from .catalog import catalog_surface
        return catalog_surface(spec["id"])
    else:
        raise SurfaceError(f"unknown surface kind {kind!r}")
    return S


# ---------------------------------------------------------------------------
# surfaces presented by lattice data

def lattice_surface(name: str, gram: Sequence[Sequence[int]], canonical: Sequence[int],
                    points: Mapping[str, Sequence[Sequence[int]]],
                    curves: Mapping[str, Sequence[int]] = (), basis: Sequence[str] | None = None,
                    kind: str = "CatalogSurface", cover: int | None = None) -> SurfaceModel:
    """Contract chains of ``-2``-curves on a smooth surface.

    ``gram`` is the (integral) intersection form on ``Pic`` of the minimal
    resolution, ``points`` maps each singular point to the classes of its
    exceptional curves.  ``Weil(S) = Pic(S') / <exceptional curves>`` and the
    pairing is the one of the pulled-back (orthogonally projected) classes.
    """
    n = len(gram)
    G = [[Fraction(x) for x in row] for row in gram]
    roots = [tuple(r) for chain in points.values() for r in chain]

    def dot(u, v):
        return sum(u[i] * G[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])

    R = [[dot(a, b) for b in roots] for a in roots]
    Rinv = _inverse(R)

    def pullback(x):
        rhs = [dot(x, r) for r in roots]
        coef = [sum(Rinv[i][j] * rhs[j] for j in range(len(roots))) for i in range(len(roots))]
        return [x[k] - sum(coef[i] * roots[i][k] for i in range(len(roots))) for k in range(n)]

    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pulled = [pullback(u) for u in units]
    pairing = tuple(tuple(dot(pulled[i], pulled[j]) for j in range(n)) for i in range(n))
    for r in roots:
        if dot(canonical, r) != 0:
            raise SurfaceError(f"{name}: K is not orthogonal to exceptional curve {r}")

    sing = []
    for pname, chain in points.items():
        M = [[int(dot(a, b)) for b in chain] for a in chain]
        U, D, _ = smith_normal_form(M)
        diag = [D[i][i] for i in range(len(chain))]
        nontriv = [i for i, d in enumerate(diag) if abs(d) != 1]
        if len(nontriv) != 1:
            raise SurfaceError(f"{name}: local class group at {pname} is not cyclic: {diag}")
        t = nontriv[0]
        order = abs(diag[t])
        restriction = []
        for u in units:
            v = [int(dot(u, c)) for c in chain]
            restriction.append(sum(U[t][j] * v[j] for j in range(len(chain))) % order)
        sing.append(SingularPoint(pname, order, tuple(restriction), f"A{len(chain)}"))
    basis = tuple(basis or (["h"] + [f"e{i}" for i in range(1, n)]))
    return SurfaceModel(name, kind, basis, pairing, tuple(int(k) for k in canonical),
                        tuple(roots), tuple(sing), tuple((k, tuple(v)) for k, v in dict(curves).items()),
                        params=(cover,) if cover else ())


def _inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise SurfaceError("singular intersection matrix on exceptional curves")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def cyclic_quotient_of_p2(order: int, weights: Sequence[int], name: str) -> SurfaceModel:
    """``P^2 / (Z/order)`` acting by ``x_i -> eps^{w_i} x_i`` with isolated fixed points.

    Generators are the images ``A, B, C`` of the coordinate lines.  The local
    class of the line ``x_j = 0`` at the fixed point ``p_k`` is the character
    ``w_j - w_k`` of the semi-invariant local coordinate ``x_j / x_k``.
    """
    w = [x % order for x in weights]
    if len(set(w)) != 3:
        raise SurfaceError("weights must be distinct mod order (isolated fixed points)")
    for d in {math.gcd((a - b) % order, order) for a in w for b in w if a != b}:
        if d != 1:
            raise SurfaceError("action must be free away from the coordinate points")
    names = ("A", "B", "C")
    third = Fraction(1, order)
    pairing = tuple(tuple(third for _ in range(3)) for _ in range(3))
    relations = ((order, -order, 0), (order, 0, -order), (order - 1, -1, -1))
    pts = []
    for k in range(3):
        restr = tuple(0 if j == k else (w[j] - w[k]) % order for j in range(3))
        pts.append(SingularPoint(f"p_{'xyz'[k]}", order, restr,
                                 f"1/{order}({(w[(k + 1) % 3] - w[k]) % order},{(w[(k + 2) % 3] - w[k]) % order})"))
    return SurfaceModel(name, "CatalogSurface", names, pairing, (-1, -1, -1), relations,
                        tuple(pts), tuple((n, tuple(int(i == j) for j in range(3))) for i, n in enumerate(names)),
                        params=("P2/(Z/%d)" % order, tuple(w)))
