"""Log canonical thresholds of plane curve germs by embedded resolution.

Blow up points until the reduced total transform is simple normal
crossing, recording the log discrepancy A(E) and ord_E(f) of every
exceptional divisor.  Then

    lct(f) = min( min_E A(E)/ord_E(f),  min_C 1/mult_C(f) ).

This never looks at a Newton polygon, so it is an independent check on
the Newton-polygon algorithm.  Tangent directions must be rational.

Run from the repo root:  python3 tools/lct_oracle.py [out.json]
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

u, v, w = sp.symbols("u v w")


def mult(g) -> int:
    p = sp.Poly(g, u, v)
    return min(i + j for i, j in p.monoms())


def tangent_cone(g):
    p = sp.Poly(g, u, v)
    m = mult(g)
    return sum(c * u ** i * v ** j for (i, j), c in zip(p.monoms(), p.coeffs()) if i + j == m)


def is_snc(gred, div_u: bool, div_v: bool) -> bool:
    """Reduced curve ``gred = 0`` plus the exceptional axes, snc at the origin?"""
    if gred.subs({u: 0, v: 0}) != 0:
        return True
    m = mult(gred)
    if m >= 2:
        return False
    lin = sp.Poly(tangent_cone(gred), u, v)
    a = lin.coeff_monomial(u)  # gred ~ a u + b v
    b = lin.coeff_monomial(v)
    if div_u and div_v:
        return False
    if div_u and b == 0:
        return False  # tangent to u = 0
    if div_v and a == 0:
        return False
    return True


def resolve(g, gred, Au, ou, Av, ov, depth, out, max_depth):
    """Local data: total transform ``u^ou v^ov g``; ``Au``/``Av`` are None for non-exceptional axes."""
    if gred.subs({u: 0, v: 0}) != 0:
        return
    if is_snc(gred, Au is not None, Av is not None):
        return
    if depth > max_depth:
        raise RuntimeError("resolution did not finish")
    au = 1 if Au is None else Au
    av = 1 if Av is None else Av
    A = au + av
    o = ou + ov + mult(g)
    out.append((A, o))
    # directions of the strict transform on E
    tc = sp.Poly(tangent_cone(gred), u, v)
    # chart 1: u = u, v = u v1; E = (u = 0); points v1 = t
    c1 = sp.Poly(tc.as_expr().subs({u: 1, v: w}), w)
    for t in sp.roots(c1, multiple=False):
        if not t.is_rational:
            raise ValueError(f"irrational tangent direction {t}")
        g1 = strict(g, "u", t)
        r1 = strict(gred, "u", t)
        resolve(g1, r1, A, o, Av if t == 0 else None, ov if t == 0 else 0, depth + 1, out, max_depth)
    # chart 2 only for the direction u = 0 (v1 = infinity)
    if sp.Poly(tc.as_expr().subs({v: 1, u: w}), w).eval(0) == 0:
        g2 = strict(g, "v", 0)
        r2 = strict(gred, "v", 0)
        resolve(g2, r2, Au, ou, A, o, depth + 1, out, max_depth)


def strict(g, chart: str, t):
    """Strict transform in a chart, recentred at the point ``t``."""
    m = mult(g)
    if chart == "u":
        h = sp.expand(g.subs(v, u * (v + t)))
        h = sp.expand(sp.cancel(h / u ** m))
    else:
        h = sp.expand(g.subs(u, v * (u + t)))
        h = sp.expand(sp.cancel(h / v ** m))
    return h


def lct(f, max_depth: int = 30) -> Fraction:
    g = sp.expand(f)
    _, factors = sp.factor_list(g, u, v)
    comp = [k for fac, k in factors if sp.Poly(fac, u, v).total_degree() > 0
            and fac.subs({u: 0, v: 0}) == 0]
    gred = sp.expand(sp.prod([fac for fac, k in factors if sp.Poly(fac, u, v).total_degree() > 0]))
    out: list[tuple[int, int]] = []
    resolve(g, gred, None, 0, None, 0, 0, out, max_depth)
    cands = [Fraction(A, o) for A, o in out] + [Fraction(1, k) for k in comp]
    return min(cands + [Fraction(1)])


CORPUS = {
    "smooth": v - u ** 2,
    "node": v ** 2 - u ** 2,
    "cusp": v ** 2 - u ** 3,
    "tacnode": v ** 2 - u ** 4,
    "A4": v ** 2 - u ** 5,
    "E6": v ** 3 - u ** 4,
    "E8": v ** 3 - u ** 5,
    "D4": u * v * (v - u),
    "D5": u ** 2 * v + v ** 4,
    "double_branch": (v - u ** 2) ** 2,
    "double_line": (v ** 2 - u ** 2) ** 2,
    "y2_plus_x5y": v ** 2 + u ** 5 * v,
    "y3_plus_x7": v ** 3 + u ** 7,
    "higher_cusp": (v - u ** 2) ** 2 - u ** 5,
    "two_tangent_parabolas": (v - u ** 2) * (v + u ** 2),
    "triple_smooth": (v - u ** 3) ** 3,
}


def to_rows(f) -> list[list[int]]:
    p = sp.Poly(sp.expand(f), u, v)
    rows = []
    for (i, j), c in zip(p.monoms(), p.coeffs()):
        c = sp.Rational(c)
        rows.append([int(i), int(j), int(c.p), int(c.q)])
    return sorted(rows)


def main(path: Path) -> None:
    data = {}
    for name, f in CORPUS.items():
        data[name] = {"germ": to_rows(f), "lct": str(lct(f))}
        print(f"{name:24s} {data[name]['lct']}", file=sys.stderr)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/lct_oracle.json"))
