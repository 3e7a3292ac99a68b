"""Certified failures of Kawamata-Viehweg vanishing on ruled surfaces, and the
classifier deciding when vanishing is guaranteed."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .divisors import CurveDivisor
from .errors import (DivisibilityFailure, InputNotInScope, NotLogTerminal, NotTango,
                     PreconditionViolation, UnsupportedConfiguration)
from .lattice import Ampleness, SurfaceClass, SurfaceLattice, ample_test
from .tango import TangoReport, is_divisible


# -- pairs and KLT --


@dataclass(frozen=True)
class BoundaryComponent:
    label: str
    cls: SurfaceClass
    coeff: Fraction
    smooth: bool = True
    disjoint: bool = True

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff < 0:
            raise ValueError("boundary coefficients must be nonnegative")

    def to_json(self) -> dict:
        return {"label": self.label, "class": str(self.cls), "coeff": str(self.coeff),
                "smooth": self.smooth, "disjoint": self.disjoint}


@dataclass(frozen=True)
class PairData:
    lattice: SurfaceLattice
    components: tuple[BoundaryComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        labels = [c.label for c in self.components]
        if len(set(labels)) != len(labels):
            raise ValueError("boundary components must be distinct")

    @property
    def boundary(self) -> SurfaceClass:
        B = SurfaceClass(0, 0)
        for c in self.components:
            B = B + c.coeff * c.cls
        return B

    def to_json(self) -> dict:
        return {"lattice": self.lattice.to_json(), "components": [c.to_json() for c in self.components]}


@dataclass(frozen=True)
class KLTVerdict:
    klt: bool
    reason: str

    def __bool__(self):
        return self.klt


def klt_check(pair: PairData) -> KLTVerdict:
    """Smooth ambient surface, smooth pairwise-disjoint components: KLT iff all c_i < 1."""
    for c in pair.components:
        if not (c.smooth and c.disjoint):
            raise UnsupportedConfiguration(
                f"component {c.label} is not flagged smooth and disjoint; general KLT is out of scope")
    bad = [c for c in pair.components if c.coeff >= 1]
    if bad:
        return KLTVerdict(False, "coefficient >= 1: " + ", ".join(f"{c.label}={c.coeff}" for c in bad))
    if not pair.components:
        return KLTVerdict(True, "empty boundary")
    return KLTVerdict(True, "smooth disjoint components with coefficients < 1")


# -- certificates --


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "passed": self.passed}


@dataclass(frozen=True)
class BlowupStep:
    center: tuple[str, ...] | None
    multiplicity: Fraction
    a: Fraction
    round_up: int
    frac_neg_a: Fraction
    delta: Fraction
    new_coeff: Fraction
    margin: Fraction

    def to_json(self) -> dict:
        return {"center": None if self.center is None else list(self.center),
                **{k: str(getattr(self, k)) for k in
                   ("multiplicity", "a", "round_up", "frac_neg_a", "delta", "new_coeff", "margin")}}


@dataclass
class KVCertificate:
    curve_id: str
    p: int
    c: Fraction
    q: int
    L: str
    deg_L: int
    genus: int
    lattice: SurfaceLattice
    pair: PairData
    classes: dict[str, SurfaceClass]
    checks: list[Check] = field(default_factory=list)
    h1_lower_bound: int = 0
    h1_derivation: list[str] = field(default_factory=list)
    oracle_h1: int | None = None
    blowups: list[BlowupStep] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(ch.passed for ch in self.checks)

    def failed(self) -> list[Check]:
        return [ch for ch in self.checks if not ch.passed]

    def to_json(self) -> dict:
        return {
            "curve": self.curve_id, "p": self.p, "c": str(self.c), "q": self.q,
            "L": self.L, "deg_L": self.deg_L, "genus": self.genus,
            "lattice": self.lattice.to_json(), "pair": self.pair.to_json(),
            "classes": {k: str(v) for k, v in self.classes.items()},
            "checks": [ch.to_json() for ch in self.checks],
            "h1_lower_bound": self.h1_lower_bound,
            "h1_derivation": list(self.h1_derivation),
            "oracle_h1": self.oracle_h1,
            "blowups": [s.to_json() for s in self.blowups],
            "valid": self.valid,
        }


def preset_dagger(p: int) -> tuple[Fraction, int]:
    """The three preset (c, q) choices."""
    if p == 2:
        return Fraction(2, 3), 0
    if p == 3:
        return Fraction(5, 6), 1
    if p >= 5:
        return Fraction(1, 2), (p - 3) // 2
    raise ValueError(f"p = {p} is not a prime")


def _frac_part(a: Fraction) -> Fraction:
    return a - math.floor(a)


def construct_3_1(report: TangoReport, c, curve=None) -> KVCertificate:
    """Certificate that D - (K_X + B) is ample, (X, B) is KLT and h^1(X, D) >= 1.

    ``curve`` (optional) enables the split-bundle oracle value for h^1.
    """
    c = Fraction(c)
    p = report.p
    if not report.is_tango or report.n_lower is None or report.n_lower <= 0:
        raise NotTango(f"{report.curve_id} is not certified Tango (n_lower = {report.n_lower})")
    if not report.exact:
        raise PreconditionViolation(f"n(C) not exact for {report.curve_id}: [{report.n_lower}, {report.n_upper}]")
    if report.base_divisor is None:
        raise PreconditionViolation("report carries no base divisor")
    if not (Fraction(1, p) < c < 1):
        raise PreconditionViolation(f"c = {c} must satisfy 1/p = {Fraction(1, p)} < c < 1")
    if (c * p).denominator == 1:
        raise PreconditionViolation(f"cp = {c * p} must not be an integer")

    g = report.genus
    L = report.base_divisor
    d = int(L.degree)
    cp = c * p
    fl = math.floor(cp)
    q = fl - 1
    Cp = SurfaceClass(p, -p * d)
    lat = SurfaceLattice(g, d, negative_curve=Cp)
    K = lat.canonical_class()
    B = c * Cp
    D = SurfaceClass(q, 2 * g - 2 - q * d)
    H = D - K - B
    pair = PairData(lat, (BoundaryComponent("C'", Cp, c),))
    E, Fc = SurfaceClass.E(), SurfaceClass.F()
    cert = KVCertificate(report.curve_id, p, c, q, L.text(), d, g, lat, pair,
                         {"E": E, "F": Fc, "K_X": K, "C'": Cp, "B": B, "D": D, "H": H})
    chk = cert.checks.append

    Hexp = SurfaceClass(fl + 1 - cp, (cp - fl) * d)
    chk(Check("H-identity", f"([cp]+1-cp, (cp-[cp])*deg L) = {Hexp}", str(H), H == Hexp))
    av = ample_test(H, lat)
    chk(Check("ample (cone-criterion)", "Ample", f"{av.verdict.value}: {av.reason}", av.is_ample))
    kv = klt_check(pair)
    chk(Check("klt", "KLT", kv.reason, kv.klt))
    chk(Check("q-nonnegative", "q = [cp] - 1 >= 0", str(q), q >= 0))
    ec, cc = lat.intersect(E, Cp), lat.intersect(Cp, Cp)
    chk(Check("E.C' = 0", "0", str(ec), ec == 0))
    chk(Check("C'^2 < 0", f"-p^2*deg L = {-p * p * d}", str(cc), cc < 0 and cc == -p * p * d))

    # D = qE + f*(K_C - qL): H^1(X, D) = H^1(C, S^q(E) (K_C - qL)) and by Serre duality this is dual to
    # H^0(C, S^q(E)^v (qL)), which contains H^0(O_C) via the quotient S^q(E) -> L^q.
    chain_ok = q >= 0 and D.x == q and D.y == (2 * g - 2) - q * d
    cert.h1_derivation = [
        f"D = {q}E + f*(K_C - {q}L): f*-part degree {2 * g - 2} - {q}*{d} = {D.y}",
        f"H^1(X, D) = H^1(C, S^{q}(E) x O(K_C - {q}L)) (R^1 f_* = 0 since q >= 0)",
        f"= H^0(C, S^{q}(E)^v x O({q}L))^v by Serre duality on C",
        f"S^{q}(E) -> L^{q} -> 0 gives L^-{q} in S^{q}(E)^v, so H^0 contains H^0(L^-{q} x L^{q}) = H^0(O_C) = k",
    ]
    cert.h1_lower_bound = 1 if chain_ok else 0
    chk(Check("h1-lower-bound", ">= 1 (subsheaf chain)", str(cert.h1_lower_bound), cert.h1_lower_bound >= 1))

    if curve is not None and curve.semigroup_generators is not None:
        from .oracle import SemigroupData, split_h1_surface
        try:
            zi = curve.z_inf
        except ValueError:
            zi = None
        if zi is not None and L.support == [zi]:
            S = SemigroupData.from_curve(curve)
            split = SurfaceLattice(g, d, decomposable=True)
            cert.oracle_h1 = split_h1_surface(split, q, int(D.y), S)
            chk(Check("oracle-h1 (split degeneration)", f">= {cert.h1_lower_bound}", str(cert.oracle_h1),
                      cert.oracle_h1 >= cert.h1_lower_bound))
    return cert


def blowup_transport(cert: KVCertificate, steps) -> KVCertificate:
    """Transport a certificate through a sequence of point blow-ups.

    Each step is either a list of boundary labels through the center (the
    original components, or ``E1``, ``E2``, ... for earlier exceptional
    curves), or directly the multiplicity of the crepant boundary there.
    """
    H = cert.classes["H"]
    H2 = cert.lattice.intersect(H, H)
    crepant = {comp.label: comp.coeff for comp in cert.pair.components}
    new = replace(cert, checks=list(cert.checks), blowups=list(cert.blowups),
                  h1_derivation=list(cert.h1_derivation))
    sum_d2 = sum((s.delta ** 2 for s in new.blowups), Fraction(0))
    for k, st in enumerate(cert.blowups, 1):
        crepant[f"E{k}"] = -st.a
    for step in steps:
        i = len(new.blowups) + 1
        if isinstance(step, (list, tuple)):
            labels = tuple(step)
            if len(labels) > 2:
                raise UnsupportedConfiguration("more than two boundary components through a point is not SNC")
            unknown = [lab for lab in labels if lab not in crepant]
            if unknown:
                raise ValueError(f"unknown boundary components {unknown}")
            m = sum((crepant[lab] for lab in labels), Fraction(0))
        else:
            labels, m = None, Fraction(step)
        a = 1 - m
        if a <= -1:
            raise NotLogTerminal(f"step {i}: discrepancy a = {a} <= -1")
        fna = _frac_part(-a)
        slack = H2 - sum_d2
        delta = min(1 - fna, slack) / 2
        sum_d2 += delta * delta
        margin = H2 - sum_d2
        bs = BlowupStep(labels, m, a, math.ceil(a), fna, delta, fna + delta, margin)
        new.blowups.append(bs)
        crepant[f"E{i}"] = -a
        new.checks.append(Check(f"blowup {i}: a > -1", "> -1", str(a), a > -1))
        new.checks.append(Check(f"blowup {i}: {{-a}} + delta < 1", "< 1", str(fna + delta),
                                fna + delta < 1 and delta > 0))
        new.checks.append(Check(f"blowup {i}: ampleness margin", "H^2 - sum delta^2 > 0", str(margin), margin > 0))
    new.h1_derivation.append(
        "H^1(X~, D~) = H^1(X, h_* O(D~)) = H^1(X, D) (R^1 h_* = 0, projection formula)")
    new.checks.append(Check("h1 inherited", f">= {cert.h1_lower_bound}", str(new.h1_lower_bound),
                            new.h1_lower_bound == cert.h1_lower_bound >= 1))
    return new


# -- class identities for the contraction and the covers --


@dataclass
class CheckRecord:
    name: str
    data: dict
    checks: list[Check] = field(default_factory=list)
    derived: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(ch.passed for ch in self.checks)

    def to_json(self) -> dict:
        return {"name": self.name, "data": self.data, "checks": [c.to_json() for c in self.checks],
                "derived": list(self.derived), "passed": self.passed}


_COR34_DEG_L = {3: 4, 5: 2, 7: 2}


def cor_3_4_check(p: int, deg_L: int | None = None) -> CheckRecord:
    """p(K_X + aC') = p(p-1)E and p(D + bC') = p^2 E on Raynaud-Tango degree data (2g - 2 = p deg L)."""
    if p < 3:
        raise PreconditionViolation("needs p >= 3")
    d = deg_L if deg_L is not None else _COR34_DEG_L.get(p, 2)
    if (p * d) % 2:
        raise PreconditionViolation(f"2g - 2 = p*deg L = {p * d} must be even")
    g = p * d // 2 + 1
    if p == 3:
        a, b = Fraction(4, 3), Fraction(2, 3)
    else:
        a, b = Fraction(p + 1, p), Fraction(p + 3, 2 * p)
    _, q = preset_dagger(p)
    lat = SurfaceLattice(g, d, negative_curve=SurfaceClass(p, -p * d))
    K = lat.canonical_class()
    Cp = lat.negative_curve
    D = SurfaceClass(q, 2 * g - 2 - q * d)
    rec = CheckRecord("cor34", {"p": p, "g": g, "deg_L": d, "a": str(a), "b": str(b), "q": q,
                                "K_X": str(K), "C'": str(Cp), "D": str(D)})
    lhs1 = p * (K + a * Cp)
    lhs2 = p * (D + b * Cp)
    rec.checks.append(Check("p(K_X + aC') = p(p-1)E", str(SurfaceClass(p * (p - 1), 0)), str(lhs1),
                            lhs1 == SurfaceClass(p * (p - 1), 0)))
    rec.checks.append(Check("p(D + bC') = p^2 E", str(SurfaceClass(p * p, 0)), str(lhs2),
                            lhs2 == SurfaceClass(p * p, 0)))
    rec.derived = [
        f"a = {a} > 1: the contracted surface is not KLT",
        "D' - K_Y is the pushforward of a class ample off the contracted curve",
    ]
    return rec


@dataclass
class CoverPlan:
    N: CurveDivisor
    M: SurfaceClass
    cover_degree: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def to_json(self) -> dict:
        return {"N": self.N.to_json(), "M": str(self.M), "cover_degree": self.cover_degree,
                "checks": [c.to_json() for c in self.checks], "passed": self.passed}


def thm_3_5_plan(report: TangoReport, lattice: SurfaceLattice | None = None) -> CoverPlan:
    """Cover data N, M with kM = E + C' (k = 2 for odd p, 3 for p = 2)."""
    p = report.p
    if not report.is_tango:
        raise NotTango(f"{report.curve_id} is not certified Tango")
    L = report.base_divisor
    if L is None or not is_divisible(L, p) or not report.is_integral_type:
        raise DivisibilityFailure(f"base divisor {None if L is None else L.text()} is not divisible for p = {p}")
    k = 3 if p == 2 else 2
    N = L / k
    dN = N.degree
    M = SurfaceClass(Fraction(p + 1, 2), -p * dN) if p >= 3 else SurfaceClass(1, -2 * dN)
    d = int(L.degree)
    if lattice is None:
        lattice = SurfaceLattice(report.genus, d, negative_curve=SurfaceClass(p, -p * d))
    Cp = lattice.negative_curve or SurfaceClass(p, -p * d)
    plan = CoverPlan(N, M, k)
    plan.checks.append(Check("N integral", "integral", N.text(), N.is_integral()))
    plan.checks.append(Check("M integral", "integral", str(M), M.is_integral()))
    target = SurfaceClass.E() + Cp
    plan.checks.append(Check(f"{k}M = E + C'", str(target), str(k * M), k * M == target))
    return plan


# -- vanishing classifier --


def lemma_4_3_bound(n: int, degL: int) -> int:
    """Minimum degree of a quotient line bundle of S^n of a rank-2 bundle with a degree-degL quotient."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 0 and degL >= 0:
        raise ValueError("the bound needs deg L < 0")
    return n * degL


@dataclass
class Verdict:
    kind: str  # "VanishingGuaranteed" or "PossibleCounterexample"
    reason: str
    H: SurfaceClass
    trace: list[dict] = field(default_factory=list)
    hypotheses: list[str] = field(default_factory=list)

    @property
    def vanishing(self) -> bool:
        return self.kind == "VanishingGuaranteed"

    def to_json(self) -> dict:
        return {"kind": self.kind, "reason": self.reason, "H": str(self.H), "trace": self.trace,
                "hypotheses": self.hypotheses}


def _case_a(lattice: SurfaceLattice, pair: PairData, S: SurfaceClass, H: SurfaceClass) -> Verdict | None:
    """Trace for B = c*S with S a section of self-intersection -e <= 0."""
    comps = pair.components
    if not comps:
        c = Fraction(0)
    elif len(comps) == 1 and comps[0].cls == S:
        c = comps[0].coeff
    else:
        return None
    e = -lattice.intersect(S, S)
    # rewrite H = xE + yF in the basis (S, F), S = E + kF
    x = H.x
    y = H.y - x * S.y
    n = x + c - 2
    trace = [{"step": "normalize", "section": str(S), "e": str(e), "c": str(c), "x": str(x), "y": str(y)},
             {"step": "D - f*K_C", "class": f"({n})S + ({y - e})F"}]
    if n < 0:
        trace.append({"step": "zero pushforward", "x+c-2": str(n),
                      "conclusion": "f_* O_X(D - f*K_C) = 0, so H^1(X, D) = 0"})
        return Verdict("VanishingGuaranteed", "CaseATrace", H, trace)
    rhs = (y - x * e) + (1 - c) * e
    assert rhs > 0, "ampleness forces (y - xe) + (1 - c)e > 0"
    step = {"step": "quotient degree contradiction", "x+c-2": str(n),
            "inequality": "-d_1 >= (y - xe) + (1 - c)e", "rhs": str(rhs), "rhs_positive": True,
            "conclusion": "contradicts d_1 >= 0, so H^1(X, D) = 0"}
    if e > 0:
        step["lemma_4_3_bound"] = lemma_4_3_bound(int(n), int(-e))
    trace.append(step)
    return Verdict("VanishingGuaranteed", "CaseATrace", H, trace)


def _sections(lattice: SurfaceLattice) -> list[SurfaceClass]:
    out = [SurfaceClass.E()]
    C = lattice.negative_curve
    if C is not None and C.x == 1 and C != out[0]:
        out.append(C)
    return out


def kv_classifier(lattice: SurfaceLattice, pair: PairData, D: SurfaceClass,
                  curve_report: TangoReport | None = None) -> Verdict:
    """Decide whether vanishing of H^1(X, D) is guaranteed, else name the required hypotheses."""
    if not D.is_integral():
        raise ValueError(f"D = {D} is not integral")
    if pair.lattice != lattice:
        raise ValueError("pair lives on a different lattice")
    kv = klt_check(pair)
    if not kv:
        raise InputNotInScope(f"pair is not KLT: {kv.reason}")
    H = D - lattice.canonical_class() - pair.boundary
    av = ample_test(H, lattice)
    if av.verdict is not Ampleness.AMPLE:
        raise InputNotInScope(f"H = {H} is {av.verdict.value}: {av.reason}")
    if lattice.genus <= 1:
        return Verdict("VanishingGuaranteed", "LowGenus", H, [{"step": "genus", "g": lattice.genus}])
    S = lattice.nonpositive_section()
    if S is not None:
        v = _case_a(lattice, pair, S, H)
        if v is not None:
            return v
        return Verdict("VanishingGuaranteed", "SectionNonPositive", H,
                       [{"step": "section", "class": str(S), "self_intersection": str(lattice.intersect(S, S))}])
    nonample = [s for s in _sections(lattice) if not ample_test(s, lattice).is_ample]
    if curve_report is not None and curve_report.n_upper <= 0 and nonample:
        return Verdict("VanishingGuaranteed", "NoTangoAndNonAmpleSection", H,
                       [{"step": "non-Tango", "n_upper": curve_report.n_upper},
                        {"step": "non-ample section", "class": str(nonample[0])}])
    tango = curve_report is not None and curve_report.is_tango
    if tango or nonample:
        return Verdict("PossibleCounterexample", "TangoCurve", H,
                       hypotheses=["C is a Tango curve"] + ([] if tango else ["(not certified by the report)"]))
    return Verdict("PossibleCounterexample", "AllSectionsAmple", H,
                   hypotheses=["either C is a Tango curve or all sections of f are ample"])
