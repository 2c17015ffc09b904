"""The quotient manifold M_d^n/Z_m as a decidable quotient set.

Points are nonzero n-vectors taken modulo the deck group generated by
z -> d*z and z -> e^{2*pi*i/m} * z.  Equality is decided by a bounded
search over deck candidates; canonical representatives live in the
annulus ln||z|| / ln|d| in [0, 1) with a phase normalization for the
Z_m factor.
"""

import math
from dataclasses import dataclass

import numpy as np

from .cmatrix import TWO_PI, principal_arg


@dataclass(frozen=True)
class HopfParams:
    """The triple (d, n, m) defining M_d^n/Z_m."""

    d: complex
    n: int
    m: int

    def __post_init__(self):
        d = complex(self.d)
        if d == 0:
            raise ValueError("d must be nonzero")
        if abs(abs(d) - 1.0) <= 1e-9:
            raise ValueError(f"|d| must differ from 1 (got |d| = {abs(d)!r})")
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        object.__setattr__(self, "d", d)


@dataclass(frozen=True)
class OrbitPoint:
    """A representative vector of one deck-group equivalence class."""

    params: HopfParams
    rep: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.rep, dtype=np.complex128)
        if v.ndim != 1 or v.shape[0] != self.params.n:
            raise ValueError(f"expected a vector of length {self.params.n}")
        if float(np.linalg.norm(v)) <= 1e-300:
            raise ValueError("orbit representative must be nonzero")
        object.__setattr__(self, "rep", v)


def _deck_scalars(params: HopfParams, ell_center: int):
    """Deck elements d^ell * e^{2*pi*i*K/m} for ell within one of ell_center+-1."""
    d = params.d
    for ell in (ell_center - 1, ell_center, ell_center + 1):
        base = d ** ell
        for K in range(params.m):
            yield base * complex(math.cos(TWO_PI * K / params.m),
                                 math.sin(TWO_PI * K / params.m))


def orbit_distance(x: np.ndarray, y: np.ndarray, params: HopfParams) -> float:
    """min over deck candidates g of ||x - g*y|| / ||x||.

    Only the modulus-compatible candidate ell* = round(ln(||x||/||y||)/ln|d|)
    and its two neighbours are searched; |d|^ell spacing is exponential, so
    these cover any small ball.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    ell_center = round(math.log(nx / ny) / math.log(abs(params.d)))
    best = math.inf
    for g in _deck_scalars(params, ell_center):
        dist = float(np.linalg.norm(x - g * y)) / nx
        if dist < best:
            best = dist
    return best


def deck_equal(z: OrbitPoint, w: OrbitPoint, tol: float = 1e-9) -> bool:
    """Decide whether z and w represent the same point of M_d^n/Z_m."""
    if z.params != w.params:
        raise ValueError("points live on different quotient manifolds")
    return orbit_distance(w.rep, z.rep, z.params) <= tol


def canonicalize(z: OrbitPoint) -> OrbitPoint:
    """Fundamental-domain representative of the orbit of z.

    Scales by d^{-floor(s)}, s = ln||z||/ln|d|, so the result has modulus
    exponent in [0, 1); then rotates by the m-th root of unity that
    minimizes the principal argument of the largest-modulus coordinate
    (earliest such coordinate on modulus ties).
    """
    p = z.params
    s = math.log(float(np.linalg.norm(z.rep))) / math.log(abs(p.d))
    v = z.rep * p.d ** (-math.floor(s))
    j = int(np.argmax(np.abs(v)))
    base_arg = principal_arg(v[j])
    best_K, best_arg = 0, math.inf
    for K in range(p.m):
        a = (base_arg + TWO_PI * K / p.m) % TWO_PI
        if a < best_arg:
            best_arg = a
            best_K = K
    v = v * np.exp(2j * math.pi * best_K / p.m)
    return OrbitPoint(p, v)
