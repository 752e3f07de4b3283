"""Log terminality of ``(S, (1 - 1/n) C + c D)`` at a point, via Newton polygons.

Local coordinates have ``C = (y = 0)``; the germ ``f`` is an equation of
``m D``.  Passing to the cover ``y = z^n`` turns the question into whether
``(T, (c/m) (g = 0))`` is klt for ``g(x, z) = f(x, z^n)``.  On ``T`` the test
is the two-case Newton polygon criterion, refined by coordinate changes that
remove a multiple factor of the principal face polynomial.

The answer is one-sided: ``klt`` or ``not-determined``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Mapping

import sympy

KLT = "klt"
NOT_DETERMINED = "not-determined"


class GermError(ValueError):
    pass


@dataclass(frozen=True)
class CurveGerm:
    """``sum b(i,j) x^i y^j`` with exact rational coefficients."""

    support: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        seen = {}
        for i, j, b in self.support:
            i, j, b = int(i), int(j), Fraction(b)
            if i < 0 or j < 0:
                raise GermError(f"negative exponent in ({i}, {j})")
            if (i, j) in seen:
                raise GermError(f"duplicate monomial x^{i} y^{j}")
            if b == 0:
                raise GermError(f"zero coefficient at x^{i} y^{j}")
            seen[(i, j)] = b
        if not seen:
            raise GermError("empty germ")
        object.__setattr__(self, "support", tuple((i, j, seen[(i, j)]) for i, j in sorted(seen)))

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], object]) -> "CurveGerm":
        return cls(tuple((i, j, Fraction(b)) for (i, j), b in d.items() if Fraction(b) != 0))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "CurveGerm":
        """Rows ``[i, j, num, den]`` (``den`` optional)."""
        out = []
        for k, row in enumerate(rows):
            row = list(row)
            if len(row) not in (3, 4):
                raise GermError(f"row {k}: expected [i, j, num, den], got {row}")
            num, den = row[2], row[3] if len(row) == 4 else 1
            if den == 0:
                raise GermError(f"row {k}: zero denominator")
            out.append((row[0], row[1], Fraction(num, den)))
        return cls(tuple(out))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): b for i, j, b in self.support}

    def to_rows(self) -> list[list[int]]:
        return [[i, j, b.numerator, b.denominator] for i, j, b in self.support]

    def substitute_cover(self, n: int) -> "CurveGerm":
        """``f(x, z^n)``."""
        return CurveGerm(tuple((i, n * j, b) for i, j, b in self.support))

    def multiplicity(self) -> int:
        return min(i + j for i, j, _ in self.support)

    def x_order(self) -> int | None:
        """Order of ``f(x, 0)``: the local intersection number with ``y = 0``."""
        xs = [i for i, j, _ in self.support if j == 0]
        return min(xs) if xs else None

    def total_degree(self) -> int:
        return max(i + j for i, j, _ in self.support)


@dataclass(frozen=True)
class KltQuery:
    n: int
    c: Fraction
    germ: CurveGerm
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.n < 1:
            raise GermError("branch order n must be >= 1")
        if self.m < 1:
            raise GermError("multiplier m must be >= 1")
        if self.c < 0:
            raise GermError("weight c must be >= 0")


def klt_bound(intersection: Fraction, mult: Fraction, n: int) -> Fraction:
    """``min(1/(C.D)_p + 1/(n mult_p D), 1/mult_p D)``."""
    a, d = Fraction(intersection), Fraction(mult)
    if a <= 0 or d <= 0 or n <= 0:
        raise ValueError("intersection number, multiplicity and n must be positive")
    return min(1 / a + 1 / (n * d), 1 / d)


def germ_bound(q: KltQuery) -> Fraction | None:
    """The closed-form bound evaluated on the germ's own invariants."""
    a = q.germ.x_order()
    if a is None:
        return None
    return klt_bound(Fraction(a, q.m), Fraction(q.germ.multiplicity(), q.m), q.n)


# ---------------------------------------------------------------------------
# Newton polygon tests

def _diagonal_point(p, q) -> Fraction | None:
    """``gamma`` with ``(gamma, gamma)`` on the segment ``[p, q]``, smallest if several."""
    (i, j), (k, l) = p, q
    di, dj = k - i, l - j
    den = di - dj
    if den == 0:
        return Fraction(i) if i == j else None
    t = Fraction(j - i, den)
    if 0 <= t <= 1:
        return i + t * di
    return None


def main_case_gamma(points) -> Fraction | None:
    best = None
    pts = sorted(points)
    for a in range(len(pts)):
        for b in range(a, len(pts)):
            g = _diagonal_point(pts[a], pts[b])
            if g is not None and (best is None or g < best):
                best = g
    return best


def degenerate_case_value(points) -> int:
    return min(max(i, j) for i, j in points)


def newton_distance(points) -> Fraction:
    g = main_case_gamma(points)
    d = Fraction(degenerate_case_value(points))
    return d if g is None else min(g, d)


def lower_edges(points) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Compact edges of the Newton polygon, ordered from the ``y`` axis down."""
    pts = sorted(set(points))
    # lower-left hull: keep for each i the smallest j, then monotone chain
    best = {}
    for i, j in pts:
        best[i] = min(j, best.get(i, j))
    cand = sorted(best.items())
    hull = []
    minj = None
    for p in cand:
        if minj is not None and p[1] >= minj:
            continue
        minj = p[1]
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return [(hull[k], hull[k + 1]) for k in range(len(hull) - 1)]


@dataclass(frozen=True)
class FaceFactor:
    u: int
    v: int
    w: int
    e: int
    root: Fraction  # root t0 of the face polynomial in t = y^u / x^v

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w, "e": self.e, "root": str(self.root)}


def qualifying_factors(g: Mapping[tuple[int, int], Fraction]) -> list[FaceFactor]:
    """Factors ``(alpha x^v + beta y^u)^e`` of Newton-face polynomials with ``e > w/(u+v)``."""
    out = []
    pts = list(g)
    t = sympy.Symbol("t")
    for (i0, j0), (i1, j1) in lower_edges(pts):
        di, dj = i1 - i0, j0 - j1
        h = gcd(di, dj)
        u, v = dj // h, di // h  # weight u on x, v on y: u*i + v*j = w
        w = u * i0 + v * j0
        bound = Fraction(w, u + v)
        if h <= bound:
            continue  # no factor can have multiplicity above the face length
        # face monomials x^{i1 - v k} y^{j1 + u k}, k = 0..h, as a polynomial in t = y^u / x^v
        coeffs = [g.get((i1 - v * k, j1 + u * k), Fraction(0)) for k in range(h + 1)]
        if h == 1:
            out.append(FaceFactor(u, v, w, 1, -coeffs[0] / coeffs[1]))
            continue
        poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])),
                          t, domain=sympy.QQ)
        _, factors = poly.sqf_list()
        for fac, e in factors:
            if e <= bound:
                continue
            if fac.degree() != 1:
                raise AssertionError(f"face factor of multiplicity {e} is not linear: {fac}")
            a1, a0 = fac.all_coeffs()
            root = -Fraction(int(a0.p), int(a0.q)) / Fraction(int(a1.p), int(a1.q))
            if root == 0:
                continue
            out.append(FaceFactor(u, v, w, e, root))
    return out


def _shift(g: Mapping[tuple[int, int], Fraction], var: str, s: Fraction, k: int) -> dict:
    """``y -> y + s x^k`` (``var='y'``) or ``x -> x + s y^k`` (``var='x'``)."""
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), b in g.items():
        p = j if var == "y" else i
        for r in range(p + 1):
            c = b * comb(p, r) * s ** (p - r)
            if var == "y":
                key = (i + k * (p - r), r)
            else:
                key = (r, j + k * (p - r))
            out[key] = out.get(key, Fraction(0)) + c
    return {key: c for key, c in out.items() if c != 0}


@dataclass
class TraceStep:
    support: list[tuple[int, int]]
    newton_distance: Fraction
    main_gamma: Fraction | None
    degenerate_value: int
    main_case: bool
    degenerate_case: bool
    factor: FaceFactor | None = None
    change: str | None = None

    def to_dict(self) -> dict:
        return {"support": [list(p) for p in self.support],
                "newton_distance": str(self.newton_distance),
                "main_gamma": None if self.main_gamma is None else str(self.main_gamma),
                "degenerate_value": self.degenerate_value,
                "main_case": self.main_case, "degenerate_case": self.degenerate_case,
                "factor": None if self.factor is None else self.factor.to_dict(),
                "change": self.change}


@dataclass
class KltVerdict:
    verdict: str
    threshold: Fraction | None
    reason: str
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def klt(self) -> bool:
        return self.verdict == KLT

    def to_dict(self, trace: bool = True) -> dict:
        d = {"verdict": self.verdict, "reason": self.reason,
             "threshold": None if self.threshold is None else str(self.threshold)}
        if trace:
            d["trace"] = [s.to_dict() for s in self.trace]
        return d


def newton_klt(q: KltQuery, max_changes: int | None = None) -> KltVerdict:
    f = q.germ.as_dict()
    if (0, 0) in f:
        raise GermError("germ is a unit: D does not pass through the point")
    kappa = q.c / q.m
    g = q.germ.substitute_cover(q.n).as_dict()
    # each change strictly raises the order along the changed direction; bound the count by deg_y f
    cap = max_changes if max_changes is not None else max(1, max(j for _, j, _ in q.germ.support))
    trace: list[TraceStep] = []
    for _ in range(cap + 1):
        pts = sorted(g)
        gamma = main_case_gamma(pts)
        dval = degenerate_case_value(pts)
        main = gamma is not None and gamma * kappa < 1
        degen = dval * kappa < 1
        dist = newton_distance(pts)
        step = TraceStep(pts, dist, gamma, dval, main, degen)
        trace.append(step)
        if (1, 0) in g or (0, 1) in g:
            # a smooth curve germ: klt exactly for coefficient < 1
            return KltVerdict(KLT if kappa < 1 else NOT_DETERMINED, Fraction(1), "smooth germ", trace)
        factors = qualifying_factors(g)
        if not factors:
            thr = 1 / dist if dist else None
            if main or degen:
                return KltVerdict(KLT, thr, "main case" if main else "degenerate case", trace)
            return KltVerdict(NOT_DETERMINED, thr, "neither main nor degenerate case applies", trace)
        assert len(factors) == 1, f"more than one qualifying face factor: {factors}"
        fac = factors[0]
        step.factor = fac
        if fac.u == 1 and q.n == 1:
            # y^u / x^v = t0  <->  y = t0 x^v
            g = _shift(g, "y", fac.root, fac.v)
            step.change = f"y -> y + {fac.root} x^{fac.v}"
        elif fac.v == 1 and fac.u % q.n == 0:
            # x = y^u / t0, pulled back from x -> x + y^(u/n)/t0 on the base
            g = _shift(g, "x", 1 / fac.root, fac.u)
            step.change = f"x -> x + {1 / fac.root} z^{fac.u}"
        else:
            step.change = "incompatible with the cover"
            return KltVerdict(NOT_DETERMINED, None, "required coordinate change is not compatible with the cover", trace)
        if not g:
            raise GermError("germ vanished identically")
    return KltVerdict(NOT_DETERMINED, None, f"no decision after {cap} coordinate changes", trace)


def klt_threshold_scan(germ: CurveGerm, n: int = 1, m: int = 1) -> Fraction | None:
    """The ``c/m`` threshold that :func:`newton_klt` certifies (its verdict is klt exactly below it)."""
    v = newton_klt(KltQuery(n, Fraction(0), germ, m))
    return None if v.threshold is None else v.threshold * m
