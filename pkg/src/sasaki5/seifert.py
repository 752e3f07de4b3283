"""Invariants of Seifert C*-bundles ``Y(S, B, sum b_i/m_i D_i)``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .abelian import FiniteAbelianGroup, TRIVIAL
from .surface import (FAMILY_BASES, QDivisor, SurfaceError, SurfaceModel, MarkedCurve, WeilClass,
                      d_invariant, h2_restriction_index, intersect, is_log_del_pezzo,
                      non_generated_points, self_intersection_K)


@dataclass(frozen=True)
class BranchDivisor:
    divisor: WeilClass
    genus: int
    b: int
    m: int

    def __post_init__(self):
        if not isinstance(self.divisor, WeilClass):
            object.__setattr__(self, "divisor", WeilClass(tuple(self.divisor)))
        if self.m < 1:
            raise ValueError(f"branch order must be >= 1, got {self.m}")
        if self.m == 1:
            if self.b != 0:
                raise ValueError("branch order 1 carries b = 0")
        elif not (0 < self.b < self.m and math.gcd(self.b, self.m) == 1):
            raise ValueError(f"need 0 < b < m and gcd(b, m) = 1, got b={self.b}, m={self.m}")


@dataclass(frozen=True)
class SeifertData:
    surface: SurfaceModel
    B: WeilClass
    branch: tuple[BranchDivisor, ...] = ()

    def __post_init__(self):
        if not isinstance(self.B, WeilClass):
            object.__setattr__(self, "B", WeilClass(tuple(self.B)))
        object.__setattr__(self, "branch", tuple(self.branch))
        if len(self.B) != self.surface.rank:
            raise SurfaceError("B does not live on the surface")

    @property
    def boundary(self) -> QDivisor:
        """``Delta = sum (1 - 1/m_i) D_i``."""
        return QDivisor(tuple((br.divisor, 1 - Fraction(1, br.m)) for br in self.branch),
                        tuple(MarkedCurve(br.genus, br.m) for br in self.branch))


def chern_class(Y: SeifertData) -> QDivisor:
    terms = [(Y.B, Fraction(1))] + [(br.divisor, Fraction(br.b, br.m)) for br in Y.branch]
    return QDivisor(tuple(terms), (None,) + tuple(MarkedCurve(br.genus, br.m) for br in Y.branch))


@dataclass(frozen=True)
class SmoothnessWitness:
    smooth: bool
    failing_points: tuple[str, ...] = ()

    def __bool__(self):
        return self.smooth


def is_smooth(Y: SeifertData) -> SmoothnessWitness:
    """``B`` must generate the local class group at every singular point.

    The branch divisors are assumed to avoid the singular points.
    """
    bad = non_generated_points(Y.surface, Y.B)
    return SmoothnessWitness(not bad, tuple(p.name for p in bad))


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction], S: SurfaceModel) -> bool:
    """Numerical proportionality of two Q-classes (pairing-degenerate directions ignored)."""
    n = S.rank
    P = S.pairing
    pu = [sum(u[i] * P[i][j] for i in range(n)) for j in range(n)]
    pv = [sum(v[i] * P[i][j] for i in range(n)) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if pu[i] * pv[j] != pu[j] * pv[i]:
                return False
    return True


@dataclass(frozen=True)
class PreSEReport:
    pre_se: bool
    smooth: bool
    log_del_pezzo: bool
    proportional: bool
    reason: str = ""

    def __bool__(self):
        return self.pre_se


def is_pre_se(Y: SeifertData) -> PreSEReport:
    """Smooth, ``-(K + Delta)`` ample and ``c_1(Y/S)`` a rational multiple of it."""
    S = Y.surface
    sm = is_smooth(Y)
    if not sm:
        return PreSEReport(False, False, False, False, f"not smooth at {', '.join(sm.failing_points)}")
    cert = is_log_del_pezzo(S, Y.boundary)
    residual = cert.residual
    prop = _proportional(chern_class(Y).vector(S.rank), residual, S)
    if not cert:
        return PreSEReport(False, True, False, prop, f"-(K+Delta) not ample (curve {cert.violating_curve})")
    if not prop:
        return PreSEReport(False, True, True, False, "Chern class not proportional to -(K+Delta)")
    return PreSEReport(True, True, True, True)


def canonical_direction(S: SurfaceModel) -> WeilClass:
    """``K_S / d(S)``: the primitive class on the canonical ray, for family surfaces."""
    d = d_invariant(S)
    if any(c % d for c in S.canonical):
        raise SurfaceError(f"K is not divisible by d(S)={d} on {S.name}")
    return WeilClass(tuple(c // d for c in S.canonical))


def family_seifert(S: SurfaceModel, m: int, r: int = 1, b: int = 1) -> SeifertData:
    """``Y(S, r K_S/d(S), b/m D)`` with ``D`` in ``|-K_S|`` elliptic."""
    D = WeilClass(tuple(-c for c in S.canonical))
    return SeifertData(S, canonical_direction(S) * r, (BranchDivisor(D, 1, b, m),))


def family_pre_se_conditions(S: SurfaceModel, r: int) -> bool:
    """The three closed-form conditions for family surfaces ``B_{m_1..m_k} T``.

    (1) all weights equal ``d(S)``; (2) ``B = r(-d(T)/d(S) H + sum E_i)``;
    (3) for singular ``T``: ``gcd(r, d(T)) = 1`` and ``d(S) = d(T)``.
    Condition (2) is built into the choice of ``B``; for smooth ``T`` with
    blow-ups, smoothness also needs ``gcd(r, d(S)) = 1`` (each ``c_i = r``).
    """
    if S.family is None:
        raise SurfaceError(f"{S.name} is outside the B_m T family")
    base, weights = S.family
    dS, dT = d_invariant(S), FAMILY_BASES[base][1]
    if any(w != dS for w in weights):
        return False
    if base in ("P2", "P1xP1"):
        # (m_i, c_i) = 1 with c_i = r
        return not weights or math.gcd(r, dS) == 1
    return math.gcd(r, dT) == 1 and dS == dT


def _single_branch(Y: SeifertData) -> BranchDivisor:
    if len(Y.branch) != 1:
        raise SurfaceError("only a single branch divisor is supported here")
    return Y.branch[0]


def h1_vanishes(Y: SeifertData, m: int | None = None) -> bool:
    """``H_1(L) = 0`` iff ``H^2(S,Z) -> H^2(D,Z) -> Z/m`` is onto.

    The image of ``H^2(S, Z) = Pic(S)`` is ``index * H^2(D, Z)``, so the test
    is ``gcd(m, index) = 1``.
    """
    br = _single_branch(Y)
    m = br.m if m is None else m
    return math.gcd(m, h2_restriction_index(Y.surface, br.divisor)) == 1


BRANCH_ONLY = "branch-formula only; fundamental-group corrections not applied"


@dataclass(frozen=True)
class TorsionResult:
    group: FiniteAbelianGroup
    complete: bool
    note: str = ""


def branch_torsion(branch: Sequence[BranchDivisor]) -> FiniteAbelianGroup:
    g = TRIVIAL
    for br in branch:
        if br.m > 1 and br.genus > 0:
            g = g + FiniteAbelianGroup.power(br.m, 2 * br.genus)
    return g


def tors_h2(Y: SeifertData) -> TorsionResult:
    """``sum (Z/m_i)^{2 g(D_i)}``, flagged when ``H_1`` is not known to vanish."""
    g = branch_torsion(Y.branch)
    try:
        ok = len(Y.branch) <= 1 and (not Y.branch or h1_vanishes(Y))
    except SurfaceError:
        ok = False
    return TorsionResult(g, ok, "" if ok else BRANCH_ONLY)


@dataclass(frozen=True)
class H3Sequence:
    left: FiniteAbelianGroup
    right: FiniteAbelianGroup
    left_exact: bool
    split: bool

    @property
    def status(self) -> str:
        if self.split:
            return "split"
        if self.left_exact:
            return "left-exact"
        return "not guaranteed"

    def to_dict(self) -> dict:
        return {"left": str(self.left), "right": str(self.right), "left_exact": self.left_exact,
                "split": self.split, "status": self.status}


def h3_sequence(Y: SeifertData, s: int, h1_s0: FiniteAbelianGroup = TRIVIAL) -> H3Sequence:
    """``H_1(S^0) -> H^3(L) -> Z^{s-1} + sum (Z/m_i)^{2g_i} -> 0`` and its exactness flags."""
    if s < 1:
        raise ValueError("rank of H^2(S, Q) is at least 1 for a projective surface")
    right = FiniteAbelianGroup(s - 1) + branch_torsion(Y.branch)
    nums = [br.m for br in Y.branch if br.m > 1] + [p.order for p in Y.surface.sing_points]
    coprime = all(math.gcd(a, b) == 1 for i, a in enumerate(nums) for b in nums[i + 1:])
    prod_m = math.prod(br.m for br in Y.branch)
    split = coprime and math.gcd(h1_s0.order, prod_m) == 1
    return H3Sequence(h1_s0, right, coprime, split)


def ke_exists(K_squared, n: int) -> bool:
    """Orbifold Kahler-Einstein criterion ``n > (2/3) K^2`` for ``(S, (1-1/n) C)``."""
    K2 = Fraction(K_squared)
    if K2 <= 0:
        raise ValueError("K^2 must be positive on a Del Pezzo surface")
    return n > Fraction(2, 3) * K2


@dataclass(frozen=True)
class InvariantReport:
    chern_class: tuple[Fraction, ...]
    smooth: bool
    failing_points: tuple[str, ...]
    pre_se: bool
    h1_zero: bool | None
    tors_h2: FiniteAbelianGroup
    tors_h2_complete: bool
    h3_sequence: H3Sequence
    ke_criterion: bool | None

    FIELDS = ("chern_class", "smooth", "failing_points", "pre_se", "h1_zero", "tors_h2",
              "tors_h2_complete", "h3_sequence", "ke_criterion")

    def to_dict(self) -> dict:
        return {
            "chern_class": [str(x) for x in self.chern_class],
            "smooth": self.smooth,
            "failing_points": list(self.failing_points),
            "pre_se": self.pre_se,
            "h1_zero": self.h1_zero,
            "tors_h2": str(self.tors_h2),
            "tors_h2_complete": self.tors_h2_complete,
            "h3_sequence": self.h3_sequence.to_dict(),
            "ke_criterion": self.ke_criterion,
        }


def invariant_report(Y: SeifertData, s: int | None = None,
                     h1_s0: FiniteAbelianGroup = TRIVIAL) -> InvariantReport:
    S = Y.surface
    sm = is_smooth(Y)
    pre = is_pre_se(Y).pre_se if sm else False
    try:
        h1 = h1_vanishes(Y)
    except SurfaceError:
        h1 = None
    t = tors_h2(Y)
    if s is None:
        s = S.rank - _rank_of(S.relations) if S.relations else S.rank
    ke = None
    if len(Y.branch) == 1 and list(Y.branch[0].divisor.coeffs) == [-c for c in S.canonical]:
        K2 = self_intersection_K(S)
        ke = ke_exists(K2, Y.branch[0].m) if K2 > 0 else None
    return InvariantReport(chern_class(Y).vector(S.rank), sm.smooth, sm.failing_points, pre, h1,
                           t.group, t.complete, h3_sequence(Y, s, h1_s0), ke)


def _rank_of(rows) -> int:
    from .abelian import invariant_factors
    return sum(1 for d in invariant_factors([list(r) for r in rows]) if d != 0)


def seifert_from_spec(spec: dict) -> SeifertData:
    """JSON schema: ``{"surface": ..., "B": [...], "branch": [{"D": [...], "genus": g, "b": b, "m": m}]}``."""
    from .surface import surface_from_spec

    if not isinstance(spec, dict) or "surface" not in spec or "B" not in spec:
        raise SurfaceError("seifert input needs 'surface' and 'B'")
    S = surface_from_spec(spec["surface"])
    branch = []
    for i, br in enumerate(spec.get("branch", [])):
        try:
            branch.append(BranchDivisor(WeilClass(tuple(br["D"])), int(br["genus"]), int(br["b"]), int(br["m"])))
        except KeyError as exc:
            raise SurfaceError(f"branch[{i}] missing field {exc}") from None
    return SeifertData(S, WeilClass(tuple(spec["B"])), tuple(branch))
