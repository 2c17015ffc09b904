"""The two classified action families of U_n on M_d^n/Z_m.

An action is parametrized by a kind (whether the special-unitary part acts
directly or through complex conjugation), integers p, q, r with r != 0, an
invertible matrix C, and the manifold parameters.  Writing a unitary A as
e^{it} B with B special unitary, the action sends a representative z to

    e^{i*sigma*t} * d^{n*r*t/(2*pi)} * C B' C^{-1} z,

where sigma = eps + (p + q/m)*n, eps = +1 or -1 per kind, and B' is B or
its conjugate.  The orbit class of the result does not depend on the
branch of the e^{it} B splitting; that is a tested property rather than an
assumption.
"""

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cmatrix import (
    TWO_PI,
    as_cmatrix,
    principal_arg,
    random_su,
    random_unitary,
    su_decompose,
)
from .hopf import HopfParams, OrbitPoint, deck_equal, orbit_distance


class ActionKind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"

    @property
    def eps(self) -> int:
        return 1 if self is ActionKind.TYPE1 else -1


# For n = 2 conjugation B -> conj(B) is inner: conj(B) = J B J^{-1} with
# this special-unitary J, which turns any Type2 action into a Type1 action
# with C replaced by C @ SU2_CONJUGATOR.
SU2_CONJUGATOR = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=np.complex128)


@dataclass
class ActionSpec:
    """Full parametrization of one action."""

    kind: ActionKind
    p: int
    q: int
    r: int
    C: np.ndarray
    params: HopfParams
    C_inv: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.r == 0:
            raise ValueError("r must be nonzero")
        self.C = as_cmatrix(self.C)
        if self.C.shape[0] != self.params.n:
            raise ValueError(
                f"C has dimension {self.C.shape[0]}, manifold has n = {self.params.n}"
            )
        if np.linalg.cond(self.C) >= 1e8:
            raise ValueError("C is too ill-conditioned to be treated as invertible")
        self.C_inv = np.linalg.inv(self.C)

    @property
    def sigma(self) -> Fraction:
        """Exact phase exponent eps + (p + q/m)*n; denominator divides m."""
        m = self.params.m
        return Fraction(self.kind.eps * m + self.params.n * (self.p * m + self.q), m)

    @property
    def sigma_float(self) -> float:
        return float(self.sigma)


def d_pow(d: complex, mu: float, branch: int = 0) -> complex:
    """Real power d^mu on the branch |d|^mu * e^{i*mu*(arg d + 2*pi*branch)}.

    The default branch uses the ordinary argument in [0, 2*pi).  Any other
    admissible power function differs by the integer ``branch``.
    """
    d = complex(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    theta = principal_arg(d) + TWO_PI * branch
    return abs(d) ** mu * cmath.exp(1j * mu * theta)


def evaluate_formula(spec: ActionSpec, t: float, B: np.ndarray, vec: np.ndarray,
                     branch: int = 0) -> np.ndarray:
    """Raw action formula for one explicit (t, B) representation of A.

    Exposed separately from :func:`act` so that well-definedness and
    power-branch identities can be probed with non-canonical splittings.
    """
    p = spec.params
    Bp = B if spec.kind is ActionKind.TYPE1 else np.conj(B)
    scalar = cmath.exp(1j * spec.sigma_float * t) * d_pow(
        p.d, p.n * spec.r * t / TWO_PI, branch=branch
    )
    return scalar * (spec.C @ (Bp @ (spec.C_inv @ vec)))


def act(spec: ActionSpec, A: np.ndarray, z: OrbitPoint) -> OrbitPoint:
    """Apply the unitary A to the point z under the given action.

    Returns a raw representative; compose with canonicalize for a
    fundamental-domain form.
    """
    if z.params != spec.params:
        raise ValueError("point and action live on different quotient manifolds")
    A = as_cmatrix(A)
    if A.shape[0] != spec.params.n:
        raise ValueError(
            f"A has dimension {A.shape[0]}, manifold has n = {spec.params.n}"
        )
    ue = su_decompose(A)
    return OrbitPoint(spec.params, evaluate_formula(spec, ue.t, ue.su_part, z.rep))


def example_lambda(params: HopfParams) -> complex:
    """Principal solution of e^{2*pi*(lambda - i)/n} = d."""
    d = params.d
    return 1j + params.n * (math.log(abs(d)) + 1j * principal_arg(d)) / TWO_PI


def example_action(params: HopfParams, A: np.ndarray, z: OrbitPoint) -> OrbitPoint:
    """The reference action A[z] = [e^{lambda*t} B z] on M_d^n (m = 1)."""
    if z.params != params:
        raise ValueError("point and action live on different quotient manifolds")
    A = as_cmatrix(A)
    if A.shape[0] != params.n:
        raise ValueError(f"A has dimension {A.shape[0]}, manifold has n = {params.n}")
    ue = su_decompose(A)
    lam = example_lambda(params)
    return OrbitPoint(params, cmath.exp(lam * ue.t) * (ue.su_part @ z.rep))


def match_example_to_type1(params: HopfParams, samples: int = 20, seed: int = 20260824,
                           tol: float = 1e-9) -> ActionSpec:
    """Express the reference action in the classified form.

    With the principal lambda branch the reference action is the Type1
    action with p = q = 0, r = 1 and C = id; the identification is
    re-verified numerically on sampled (A, z) pairs before the spec is
    returned.
    """
    if params.m != 1:
        raise ValueError("the reference action is defined on M_d^n (m = 1)")
    n = params.n
    spec = ActionSpec(ActionKind.TYPE1, p=0, q=0, r=1,
                      C=np.eye(n, dtype=np.complex128), params=params)
    rng = np.random.Generator(np.random.Philox(seed))
    for i in range(samples):
        A = random_unitary(n, seed + 1 + i)
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z = OrbitPoint(params, v)
        if not deck_equal(example_action(params, A, z), act(spec, A, z), tol):
            raise AssertionError("reference action failed to match its Type1 form")
    return spec


def _reflector_to_axis(x: np.ndarray):
    """Householder H with H x = alpha * e1, |alpha| = ||x||; returns (H, alpha)."""
    n = x.shape[0]
    norm = np.linalg.norm(x)
    alpha = -norm * (cmath.exp(1j * principal_arg(x[0])) if x[0] != 0 else 1.0)
    v = x.copy()
    v[0] -= alpha
    h = np.eye(n, dtype=np.complex128) - 2.0 * np.outer(v, v.conj()) / np.vdot(v, v)
    return h, alpha


def _unitary_mapping(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """A unitary U with U x = y, for ||x|| = ||y||."""
    hx, ax = _reflector_to_axis(x)
    hy, ay = _reflector_to_axis(y)
    phase = np.eye(x.shape[0], dtype=np.complex128)
    phase[0, 0] = ay / ax
    return hy.conj().T @ phase @ hx


def _fix_determinant(u: np.ndarray, fixed: np.ndarray) -> np.ndarray:
    """Scale u to determinant 1 by a phase on a direction orthogonal to ``fixed``."""
    n = u.shape[0]
    delta = np.linalg.det(u)
    f = fixed / np.linalg.norm(fixed)
    j = int(np.argmin(np.abs(f)))
    q = np.zeros(n, dtype=np.complex128)
    q[j] = 1.0
    q -= np.vdot(f, q) * f
    q /= np.linalg.norm(q)
    return (np.eye(n, dtype=np.complex128)
            + (1.0 / delta - 1.0) * np.outer(q, q.conj())) @ u


def solve_transport(spec: ActionSpec, z: OrbitPoint, w: OrbitPoint) -> np.ndarray:
    """A unitary A carrying z to w under the action (transitivity witness).

    The modulus equation |d|^{n*r*t/(2*pi)} = ||C^{-1}w|| / ||C^{-1}z|| fixes
    t (r != 0 makes it solvable); the remaining special-unitary factor is
    built from a pair of Householder reflections plus a determinant-fixing
    phase on an orthogonal direction (possible since n >= 2).
    """
    p = spec.params
    if z.params != p or w.params != p:
        raise ValueError("points and action live on different quotient manifolds")
    u = spec.C_inv @ z.rep
    v = spec.C_inv @ w.rep
    t = TWO_PI * math.log(np.linalg.norm(v) / np.linalg.norm(u)) / (
        p.n * spec.r * math.log(abs(p.d))
    )
    scalar = cmath.exp(1j * spec.sigma_float * t) * d_pow(p.d, p.n * spec.r * t / TWO_PI)
    target = v / scalar
    if spec.kind is ActionKind.TYPE1:
        b0 = _unitary_mapping(u, target)
        b = _fix_determinant(b0, target)
    else:
        # need conj(B) u = target, i.e. B conj(u) = conj(target)
        b0 = _unitary_mapping(np.conj(u), np.conj(target))
        b = _fix_determinant(b0, np.conj(target))
    return cmath.exp(1j * t) * b


def type2_as_type1(spec: ActionSpec) -> ActionSpec:
    """For n = 2, the Type1 action that coincides with a Type2 action.

    Conjugation is inner on SU_2, so C is replaced by C @ SU2_CONJUGATOR;
    matching the scalar phase exponents (eps flips from -1 to +1) shifts
    p to p - 1.  The two raw formulas then agree vector for vector.
    """
    if spec.params.n != 2:
        raise ValueError("the conjugation identity is specific to n = 2")
    if spec.kind is not ActionKind.TYPE2:
        raise ValueError("expected a Type2 action")
    return ActionSpec(ActionKind.TYPE1, p=spec.p - 1, q=spec.q, r=spec.r,
                      C=spec.C @ SU2_CONJUGATOR, params=spec.params)
