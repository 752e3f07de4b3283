"""Find -1/-2 curve configurations in Pic(Bl_k P^2) and freeze them as JSON.

Classes are written in the basis h, e_1..e_k with h^2 = 1, e_i^2 = -1; the
canonical class is (-3, 1, ..., 1).  Roots are r^2 = -2, K.r = 0; lines are
c^2 = -1, K.c = -1.  Each configuration is an intersection graph; the search
backtracks over roots/lines with all pairwise products prescribed.

Run from the repo root:  python3 tools/lattice_search.py
"""
from __future__ import annotations

import json
import sys
from pathlib import Path


def classes(k: int, sq: int, kdot: int, amax: int = 6):
    """Vectors (a, c_1..c_k) with a^2 - sum c^2 = sq and -3a - sum c = kdot."""
    out = []
    for a in range(-amax, amax + 1):
        target_sum = -kdot - 3 * a     # sum c_i
        target_sq = a * a - sq         # sum c_i^2

        def rec(i, s, q, acc):
            if i == k:
                if s == target_sum and q == target_sq:
                    out.append((a,) + tuple(acc))
                return
            rem = k - i
            for c in range(-4, 5):
                q2 = q + c * c
                if q2 > target_sq:
                    continue
                s2 = s + c
                # remaining entries: |sum| <= rem-1 entries bounded by sqrt of remaining square budget
                left = target_sq - q2
                if abs(target_sum - s2) ** 2 > (rem - 1) * left and rem > 1:
                    continue
                if rem == 1 and (s2 != target_sum or q2 != target_sq):
                    continue
                acc.append(c)
                rec(i + 1, s2, q2, acc)
                acc.pop()
        rec(0, 0, 0, [])
    return out


def dot(u, v):
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def search(k, items, edges, limit=1, fix_first=True):
    """items: list of (name, 'root'|'line'); edges: dict (name1, name2) -> product (others 0)."""
    roots = classes(k, -2, 0)
    lines = classes(k, -1, -1)
    pool = {"root": roots, "line": lines}
    names = [n for n, _ in items]

    def want(a, b):
        return edges.get((a, b), edges.get((b, a), 0))

    sols = []
    chosen = []

    def rec(i):
        if len(sols) >= limit:
            return
        if i == len(items):
            sols.append(list(chosen))
            return
        name, kind = items[i]
        cands = pool[kind]
        if i == 0 and fix_first:
            cands = cands[:1]
        for v in cands:
            if v in chosen:
                continue
            if all(dot(v, chosen[j]) == want(name, names[j]) for j in range(i)):
                chosen.append(v)
                rec(i + 1)
                chosen.pop()
    rec(0)
    return [{n: list(v) for n, v in zip(names, s)} for s in sols]


def chain(prefix, n):
    return [(f"{prefix}{i}", "root") for i in range(1, n + 1)], {(f"{prefix}{i}", f"{prefix}{i + 1}"): 1 for i in range(1, n)}


def config_A3_2A1():
    items = [("a", "root"), ("b", "line"), ("c1", "root"), ("c2", "root"), ("c3", "root"), ("f", "line"), ("g", "root")]
    order = [n for n, _ in items]
    edges = {(order[i], order[i + 1]): 1 for i in range(len(order) - 1)}
    sols = search(5, items, edges)
    s = sols[0]
    return {"id": "A3+2A1", "k": 5,
            "points": {"p1": [s["a"]], "p2": [s["c1"], s["c2"], s["c3"]], "p3": [s["g"]]},
            "curves": {"L1": s["b"], "L2": s["f"]}}


def config_A5_A1():
    items = [("a", "root"), ("b", "line")] + [(f"c{i}", "root") for i in range(1, 6)]
    order = [n for n, _ in items]
    edges = {(order[i], order[i + 1]): 1 for i in range(len(order) - 1)}
    s = search(6, items, edges)[0]
    return {"id": "A5+A1", "k": 6,
            "points": {"p1": [s["a"]], "p2": [s[f"c{i}"] for i in range(1, 6)]},
            "curves": {"L1": s["b"]}}


def config_3A2(limit=1):
    items, edges = [], {}
    for p in "xyz":
        it, ed = chain(p, 2)
        items += it
        edges.update(ed)
    # line A = (x = 0) passes through p_y and p_z, etc.; it meets one end of each chain
    items += [("A", "line"), ("B", "line"), ("C", "line")]
    edges.update({("A", "y1"): 1, ("A", "z2"): 1, ("B", "z1"): 1, ("B", "x2"): 1, ("C", "x1"): 1, ("C", "y2"): 1})
    sols = search(6, items, edges, limit=limit)
    s = sols[0]
    return {"id": "3A2", "k": 6,
            "points": {f"p_{p}": [s[f"{p}1"], s[f"{p}2"]] for p in "xyz"},
            "curves": {n: s[n] for n in "ABC"}}, sols


def config_3A2_same_end():
    """Both lines through each point meeting the same end curve: expected to have no solution."""
    items, edges = [], {}
    for p in "xyz":
        it, ed = chain(p, 2)
        items += it
        edges.update(ed)
    items += [("A", "line"), ("B", "line"), ("C", "line")]
    edges.update({("A", "y1"): 1, ("A", "z1"): 1, ("B", "z1"): 1, ("B", "x1"): 1, ("C", "x1"): 1, ("C", "y1"): 1})
    return search(6, items, edges, limit=1)


def config_4A2():
    items, edges = [], {}
    for p in "abcd":
        it, ed = chain(p, 2)
        items += it
        edges.update(ed)
    s = search(8, items, edges)[0]
    return {"id": "4A2", "k": 8, "points": {f"p_{p}": [s[f"{p}1"], s[f"{p}2"]] for p in "abcd"}, "curves": {}}


def main(out: Path):
    data = []
    data.append(config_A3_2A1())
    data.append(config_A5_A1())
    c, sols = config_3A2()
    c["note"] = "lines A, B, C through two points each meet opposite ends of the shared A2 chain"
    data.append(c)
    same = config_3A2_same_end()
    print("3A2 same-end configurations:", len(same), file=sys.stderr)
    data.append(config_4A2())
    body = ",\n".join("  " + json.dumps(d, sort_keys=True) for d in data)
    out.write_text('{"lattices": [\n' + body + "\n]}\n")
    print(f"wrote {out}", file=sys.stderr)


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("src/sasaki5/catalog/data/lattices.json"))
