"""Command-line front end.

Exit status: 0 on success or pass, 1 on a failed verification, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .abelian import FiniteAbelianGroup
from .klt import CurveGerm, GermError, KltQuery, klt_bound, newton_klt
from .links import BPExponents, link_homology
from .seifert import invariant_report, seifert_from_spec
from .surface import (DataNotEncoded, SurfaceError, d_invariant, genus, intersect, is_ample,
                      is_log_del_pezzo, self_intersection_K, surface_from_spec, weil_group,
                      weil_mod_pic)


class InputError(Exception):
    pass


def _read_input(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def _emit(fmt: str, data: dict, text: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def _group_line(G: FiniteAbelianGroup) -> str:
    return f"rank {G.free_rank}, torsion {G.torsion_subgroup()}"


# ---------------------------------------------------------------------------
# subcommands

def cmd_surface_show(args) -> int:
    spec = _read_input(args.input) if args.input else args.name
    if spec is None:
        raise InputError("surface-show needs a surface name or --input")
    if isinstance(spec, dict) and "surface" in spec:
        cls = spec.get("class")
        spec = spec["surface"]
    else:
        cls = None
    if args.cls:
        cls = [str(_fraction(x)) for x in args.cls.split(",")]
    S = surface_from_spec(spec)
    data = S.to_dict()
    lines = [f"{S.name} ({S.kind})"]
    if not S.encoded:
        data["encoded"] = False
        lines.append("catalog metadata only: intersection data not encoded")
        _emit(args.format, data, "\n".join(lines))
        return 0
    K2 = self_intersection_K(S)
    data["K2"] = str(K2)
    data["weil"] = str(weil_group(S))
    data["weil_mod_pic"] = str(weil_mod_pic(S))
    lines += [f"basis: {', '.join(S.basis)}", f"K = {list(S.canonical)}", f"K^2 = {K2}",
              f"Weil = {data['weil']}", f"Weil/Pic = {data['weil_mod_pic']}"]
    if S.family is not None:
        data["d"] = d_invariant(S)
        lines.append(f"d(S) = {data['d']}")
    for p in S.sing_points:
        lines.append(f"  {p.name}: {p.kind}, local class group Z/{p.order}")
    if S.curves:
        ldp = is_log_del_pezzo(S)
        data["log_del_pezzo"] = ldp.ample
        lines.append(f"-K ample: {ldp.ample}")
    if cls is not None:
        v = [Fraction(x) for x in cls]
        sq = intersect(S, v, v)
        info = {"class": [str(x) for x in v], "self_intersection": str(sq)}
        lines.append(f"class {info['class']}: self-intersection {sq}")
        if all(x.denominator == 1 for x in v):
            try:
                info["genus"] = genus(S, v)
                lines.append(f"  genus {info['genus']}")
            except SurfaceError:
                pass
        if S.curves:
            cert = is_ample(S, v)
            info["ampleness"] = cert.to_dict()
            if cert.ample:
                lines.append("  ample")
            elif cert.violating_curve:
                lines.append(f"  not ample: {cert.violating_curve} has intersection {cert.violating_value}")
            else:
                lines.append(f"  not ample: self-intersection {cert.self_intersection}")
        data["class"] = info
    _emit(args.format, data, "\n".join(lines))
    return 0


def cmd_seifert_check(args) -> int:
    if not args.input:
        raise InputError("seifert-check needs --input")
    spec = _read_input(args.input)
    Y = seifert_from_spec(spec)
    s = spec.get("s") if isinstance(spec, dict) else None
    h1 = FiniteAbelianGroup.from_dict(spec["h1_s0"]) if isinstance(spec, dict) and "h1_s0" in spec else None
    rep = invariant_report(Y, s, h1) if h1 is not None else invariant_report(Y, s)
    d = rep.to_dict()
    lines = [f"surface: {Y.surface.name}", f"c_1 = {d['chern_class']}", f"smooth: {rep.smooth}"]
    if rep.failing_points:
        lines.append(f"  B fails to generate at: {', '.join(rep.failing_points)}")
    lines += [f"pre-SE: {rep.pre_se}", f"H_1 = 0: {rep.h1_zero}",
              f"tors H_2 = {rep.tors_h2}" + ("" if rep.tors_h2_complete else " (branch part only)"),
              f"H_3 sequence: {rep.h3_sequence.status}"]
    if rep.ke_criterion is not None:
        lines.append(f"KE criterion n > (2/3) K^2: {rep.ke_criterion}")
    _emit(args.format, d, "\n".join(lines))
    return 0


def cmd_klt_bound(args) -> int:
    a, d = _fraction(args.intersection), _fraction(args.mult)
    n = args.n
    try:
        b = klt_bound(a, d, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    t1, t2, t3 = 1 / a, 1 / (n * d), 1 / d
    data = {"intersection": str(a), "mult": str(d), "n": n, "bound": str(b),
            "terms": [str(t1), str(t2), str(t3)], "c_equal_1_admissible": b > 1}
    lines = [f"min{{{t1}+{t2}, {t3}}} = {b}"]
    lines.append("c=1 is admissible (bound > 1)" if b > 1 else "c=1 is not covered (bound <= 1)")
    if args.c is not None:
        c = _fraction(args.c)
        data["c"] = str(c)
        data["c_below_bound"] = c < b
        lines.append(f"c={c}: {'klt by the criterion' if c < b else 'not covered by the criterion'}")
    _emit(args.format, data, "\n".join(lines))
    return 0


def cmd_klt_newton(args) -> int:
    spec = _read_input(args.input) if args.input else {}
    if not isinstance(spec, dict):
        raise InputError("klt input must be an object with 'germ', 'n', 'c'")
    rows = spec.get("germ")
    if args.germ:
        try:
            rows = json.loads(args.germ)
        except json.JSONDecodeError as exc:
            raise InputError(f"--germ: {exc.msg} at column {exc.colno}") from None
    if rows is None:
        raise InputError("no germ given (use --input or --germ)")
    n = args.n if args.n is not None else spec.get("n", 1)
    c = _fraction(args.c) if args.c is not None else _fraction(str(spec.get("c", "1")))
    m = spec.get("m", 1)
    q = KltQuery(int(n), c, CurveGerm.from_rows(rows), int(m))
    v = newton_klt(q)
    data = v.to_dict(trace=args.trace)
    lines = [f"{v.verdict} ({v.reason})"]
    if v.threshold is not None:
        lines.append(f"certified for c/m < {v.threshold}")
    if args.trace:
        for i, st in enumerate(v.trace):
            lines.append(f"  step {i}: support {st.support}, distance {st.newton_distance}, "
                         f"main {st.main_case}, degenerate {st.degenerate_case}"
                         + (f", {st.change}" if st.change else ""))
    _emit(args.format, data, "\n".join(lines))
    return 0


def cmd_link_homology(args) -> int:
    exps = args.exponents
    if args.input:
        spec = _read_input(args.input)
        exps = spec.get("exponents", exps) if isinstance(spec, dict) else spec
        weights, degree = (spec.get("weights"), spec.get("degree")) if isinstance(spec, dict) else (None, None)
    else:
        weights, degree = args.weights, args.degree
    if not exps:
        raise InputError("no exponents given")
    e = BPExponents(tuple(exps), tuple(weights) if weights else None, degree)
    G = link_homology(e)
    k = len(e.exponents) - 2
    data = {"exponents": list(e.exponents), "degree_of_homology": k, "homology": G.to_dict(), "text": str(G)}
    _emit(args.format, data, f"H_{k}(L) = {G}\n{_group_line(G)}")
    return 0


def cmd_catalog_verify(args) -> int:
    names = list(catalog.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        fn = catalog.SUITES[name]
        reports.append(fn(jobs=args.jobs) if name in ("table1", "table2") else fn())
    ok = all(r.passed for r in reports)
    data = {"passed": ok, "reports": [r.to_dict() for r in reports]}
    _emit(args.format, data, "\n\n".join(r.text() for r in reports))
    return 0 if ok else 1


def cmd_catalog_enumerate(args) -> int:
    if args.what == "blowups":
        out = []
        for row in catalog.table2():
            for ws in catalog.enumerate_blowup_families(row):
                out.append({"row": row["id"], "weights": list(ws)})
        text = "\n".join(f"{o['row']}: B_{{{''.join(map(str, o['weights']))}}}" if o["weights"]
                         else f"{o['row']}: (no blow-up)" for o in out)
        text += f"\ntotal {len(out)}"
        data = {"families": out, "total": len(out)}
    else:
        found = set()
        for base, ws in catalog.candidate_blowups():
            from .surface import family_surface
            if catalog.admits_pre_se(family_surface(base, ws)):
                found.add(catalog.canonical_form(base, ws))
        rows = sorted(found, key=lambda t: (catalog.FAMILY_BASES[t[0]][1], t[0], len(t[1]), t[1]))
        from .surface import family_name
        out = [{"base": b, "weights": list(w), "name": family_name(b, w)} for b, w in rows]
        text = "\n".join(o["name"] for o in out) + f"\ntotal {len(out)}"
        data = {"rows": out, "total": len(out)}
    _emit(args.format, data, text)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sasaki5", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = common(sub.add_parser("surface-show", help="intersection data of a surface"))
    sp.add_argument("name", nargs="?", help="e.g. P^2, F_3, B_{3111}P^2, P(1,1,3), catalog:3A2")
    sp.add_argument("--input")
    sp.add_argument("--class", dest="cls", help="comma separated coefficients, e.g. 2/5,1/5")
    sp.set_defaults(func=cmd_surface_show)

    sp = common(sub.add_parser("seifert-check", help="invariants of a Seifert bundle"))
    sp.add_argument("--input")
    sp.set_defaults(func=cmd_seifert_check)

    sp = common(sub.add_parser("klt-bound", help="closed-form klt bound"))
    sp.add_argument("intersection", help="(C.D)_p")
    sp.add_argument("mult", help="mult_p D")
    sp.add_argument("n", type=int)
    sp.add_argument("--c")
    sp.set_defaults(func=cmd_klt_bound)

    sp = common(sub.add_parser("klt-newton", help="Newton polygon klt test on y = z^n"))
    sp.add_argument("--input")
    sp.add_argument("--germ", help="JSON list of [i, j, num, den]")
    sp.add_argument("--n", type=int)
    sp.add_argument("--c")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_klt_newton)

    sp = common(sub.add_parser("link-homology", help="homology of a Brieskorn-Pham link"))
    sp.add_argument("exponents", nargs="*", type=int)
    sp.add_argument("--weights", nargs="+", type=int)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--input")
    sp.set_defaults(func=cmd_link_homology)

    sp = common(sub.add_parser("catalog-verify", help="recompute catalog tables"))
    sp.add_argument("suite", choices=tuple(catalog.SUITES) + ("all",))
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_catalog_verify)

    sp = common(sub.add_parser("catalog-enumerate", help="list enumerated families"))
    sp.add_argument("what", choices=("blowups", "table1"))
    sp.set_defaults(func=cmd_catalog_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DataNotEncoded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SurfaceError, GermError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
