"""Independent floating-point verification layer.

Every exact-arithmetic verdict has a second, formula-level confirmation
here: the kernel lattice is scanned numerically, and the group-action
axioms, well-definedness under re-splitting, transitivity, and the two
remark identities are checked on seeded random samples.  Residuals are
orbit distances, i.e. scale-free distances in the quotient.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import scan_lattice
from .action import ActionKind, ActionSpec, act, evaluate_formula, solve_transport, type2_as_type1
from .cmatrix import TWO_PI, random_unitary, su_decompose
from .effectiveness import is_effective, kernel_witness_element
from .hopf import HopfParams, OrbitPoint, orbit_distance


@dataclass(frozen=True)
class CheckResult:
    name: str
    trials: int
    max_residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "trials": self.trials,
                "max_residual": self.max_residual, "pass": self.passed}


@dataclass
class VerificationReport:
    spec_summary: dict
    seed: int
    tol: float
    checks: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"spec": self.spec_summary, "seed": self.seed, "tol": self.tol,
                "checks": [c.to_dict() for c in self.checks],
                "all_passed": self.all_passed}


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def sample_points(params: HopfParams, count: int, seed: int,
                  log10_scale: float = 0.0) -> np.ndarray:
    """Deterministic nonzero sample vectors, optionally spread in norm."""
    rng = _rng(seed)
    v = rng.standard_normal((count, params.n)) + 1j * rng.standard_normal((count, params.n))
    if log10_scale:
        v = v * 10.0 ** rng.uniform(-log10_scale, log10_scale, size=(count, 1))
    return v


def numeric_kernel_scan(spec: ActionSpec, z_samples: int = 10, tol: float = 1e-9,
                        seed: int = 0) -> list:
    """All lattice pairs (ell, k) whose scalar unitary acts trivially.

    The candidate kernel elements are e^{i(2*pi*ell/(n*r) + 2*pi*k/n)} * id
    for ell in {0, ..., |r|*m - 1}, k in {0, ..., n - 1}.  The identity
    pair (0, 0) is always included.
    """
    if z_samples < 1:
        raise ValueError("z_samples must be >= 1")
    p = spec.params
    z = sample_points(p, z_samples, seed)
    w = (spec.C @ (spec.C_inv @ z.T)).T.copy()
    return scan_lattice(spec.kind.eps, p.n, p.m, spec.p, spec.q, spec.r,
                        complex(p.d), np.ascontiguousarray(w),
                        np.ascontiguousarray(z), tol)


def nontrivial_pairs(spec: ActionSpec, pairs) -> list:
    """Filter scan output down to pairs whose scalar differs from 1.

    Lattice scalars are (n*r)-th roots of unity times integer powers of d,
    so nontrivial ones are bounded away from 1; the 1e-6 cut is safe.
    """
    p = spec.params
    out = []
    for ell, k in pairs:
        theta = TWO_PI * ell / (p.n * spec.r) + TWO_PI * k / p.n
        if abs(np.exp(1j * theta) - 1.0) > 1e-6:
            out.append((ell, k))
    return out


def kernel_scan_agrees(spec: ActionSpec, z_samples: int = 10, tol: float = 1e-9,
                       seed: int = 0) -> bool:
    """Exact verdict vs numeric scan: effective iff no nontrivial pair acts
    trivially, and the exact witness element shows up in the scan."""
    verdict = is_effective(spec)
    pairs = numeric_kernel_scan(spec, z_samples=z_samples, tol=tol, seed=seed)
    if (0, 0) not in pairs:
        return False
    nontrivial = nontrivial_pairs(spec, pairs)
    if verdict.effective:
        return not nontrivial
    w = verdict.witness
    element = kernel_witness_element(spec, w.ell, w.K)
    return bool(nontrivial) and (w.ell % (abs(spec.r) * spec.params.m), element.k) in nontrivial


def verify_group_law(spec: ActionSpec, trials: int = 200, seed: int = 1,
                     tol: float = 1e-8) -> CheckResult:
    """act(A1*A2, z) against act(A1, act(A2, z))."""
    p = spec.params
    z = sample_points(p, trials, seed)
    worst = 0.0
    for i in range(trials):
        a1 = random_unitary(p.n, seed * 1_000_003 + 2 * i)
        a2 = random_unitary(p.n, seed * 1_000_003 + 2 * i + 1)
        pt = OrbitPoint(p, z[i])
        lhs = act(spec, a1 @ a2, pt)
        rhs = act(spec, a1, act(spec, a2, pt))
        worst = max(worst, orbit_distance(lhs.rep, rhs.rep, p))
    return CheckResult("group_law", trials, worst, worst < tol)


def verify_well_definedness(spec: ActionSpec, trials: int = 50, seed: int = 2,
                            tol: float = 1e-8) -> CheckResult:
    """Re-split A = e^{i(t + 2*pi*k/n + 2*pi*ell)} (e^{-2*pi*i*k/n} B) for
    all k and ell in {-2, ..., 2} and compare the raw formula outputs in
    the quotient."""
    p = spec.params
    z = sample_points(p, trials, seed)
    worst = 0.0
    for i in range(trials):
        a = random_unitary(p.n, seed * 999_983 + i)
        pt = OrbitPoint(p, z[i])
        base = act(spec, a, pt)
        ue = su_decompose(a)
        for k in range(p.n):
            for ell in range(-2, 3):
                t2 = ue.t + TWO_PI * k / p.n + TWO_PI * ell
                b2 = np.exp(-2j * math.pi * k / p.n) * ue.su_part
                shifted = evaluate_formula(spec, t2, b2, pt.rep)
                worst = max(worst, orbit_distance(shifted, base.rep, p))
    return CheckResult("well_definedness", trials, worst, worst < tol)


def verify_transitivity(spec: ActionSpec, trials: int = 200, seed: int = 3,
                        tol: float = 1e-8, log10_scale: float = 0.0) -> CheckResult:
    """solve_transport round trip: act(A, z) must land on w."""
    p = spec.params
    zs = sample_points(p, trials, seed)
    ws = sample_points(p, trials, seed + 1, log10_scale=log10_scale)
    worst = 0.0
    for i in range(trials):
        z = OrbitPoint(p, zs[i])
        w = OrbitPoint(p, ws[i])
        a = solve_transport(spec, z, w)
        worst = max(worst, orbit_distance(act(spec, a, z).rep, w.rep, p))
    return CheckResult("transitivity", trials, worst, worst < tol)


def verify_power_branch(spec: ActionSpec, trials: int = 20, seed: int = 4,
                        tol: float = 1e-12) -> CheckResult:
    """Alternative d^mu branches: evaluating with an extra e^{2*pi*i*mu*L}
    factor and p shifted to p - L*r reproduces the standard evaluation
    exactly, as raw vectors."""
    p = spec.params
    z = sample_points(p, trials, seed)
    worst = 0.0
    for i in range(trials):
        a = random_unitary(p.n, seed * 7_919 + i)
        ue = su_decompose(a)
        base = evaluate_formula(spec, ue.t, ue.su_part, z[i])
        scale = float(np.linalg.norm(base))
        for L in range(-2, 3):
            shifted_spec = ActionSpec(spec.kind, spec.p - L * spec.r, spec.q,
                                      spec.r, spec.C, spec.params)
            alt = evaluate_formula(shifted_spec, ue.t, ue.su_part, z[i], branch=L)
            worst = max(worst, float(np.linalg.norm(alt - base)) / scale)
    return CheckResult("power_branch", trials, worst, worst < tol)


def verify_dimtwo(spec: ActionSpec, trials: int = 100, seed: int = 5,
                  tol: float = 1e-10) -> CheckResult:
    """n = 2 only: a Type2 action equals its inner-conjugation Type1 form
    as raw vectors."""
    if spec.params.n != 2 or spec.kind is not ActionKind.TYPE2:
        raise ValueError("dimtwo identity applies to Type2 actions with n = 2")
    p = spec.params
    twin = type2_as_type1(spec)
    z = sample_points(p, trials, seed)
    worst = 0.0
    for i in range(trials):
        a = random_unitary(2, seed * 104_729 + i)
        pt = OrbitPoint(p, z[i])
        lhs = act(spec, a, pt)
        rhs = act(twin, a, pt)
        scale = float(np.linalg.norm(lhs.rep))
        worst = max(worst, float(np.linalg.norm(lhs.rep - rhs.rep)) / scale)
    return CheckResult("dimtwo", trials, worst, worst < tol)


def run_full_verification(spec: ActionSpec, trials: int = 200, seed: int = 0,
                          tol: float = 1e-8) -> VerificationReport:
    """The complete oracle suite for one action spec."""
    p = spec.params
    report = VerificationReport(
        spec_summary={"kind": spec.kind.value, "p": spec.p, "q": spec.q,
                      "r": spec.r, "n": p.n, "m": p.m,
                      "d": [p.d.real, p.d.imag]},
        seed=seed, tol=tol)
    report.checks.append(verify_group_law(spec, trials, seed + 1, tol))
    report.checks.append(verify_well_definedness(spec, max(trials // 4, 1), seed + 2, tol))
    report.checks.append(verify_transitivity(spec, trials, seed + 3, tol))
    report.checks.append(verify_power_branch(spec, max(trials // 10, 1), seed + 4, 1e-12))
    if p.n == 2 and spec.kind is ActionKind.TYPE2:
        report.checks.append(verify_dimtwo(spec, trials // 2 or 1, seed + 5, 1e-10))
    agrees = kernel_scan_agrees(spec, z_samples=10, tol=1e-9, seed=seed + 6)
    report.checks.append(CheckResult("kernel_scan_agreement", 10,
                                     0.0 if agrees else 1.0, agrees))
    return report
