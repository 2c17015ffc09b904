# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel-scan backend.

Hot inner loop of the numeric kernel oracle: for every scalar-unitary
lattice candidate, act on the sample points and measure the orbit
distance back to the originals.  Mirrors ``_scan_py.scan_lattice``.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport M_PI, atan2, exp, fmod, log, llround, sqrt

cnp.import_array()

BACKEND_NAME = "compiled"

cdef double TWO_PI = 2.0 * M_PI


cdef extern from "complex.h":
    double complex cexp(double complex) nogil
    double cabs(double complex) nogil
    double complex conj(double complex) nogil
    double carg(double complex) nogil


def scan_lattice(int eps, int n, int m, int p, int q, int r,
                 double complex d,
                 cnp.ndarray[cnp.complex128_t, ndim=2] w,
                 cnp.ndarray[cnp.complex128_t, ndim=2] z,
                 double tol):
    """See ``_scan_py.scan_lattice`` for the contract."""
    cdef int nsamp = w.shape[0]
    cdef int dim = w.shape[1]
    cdef double sigma = eps + (p + (<double> q) / m) * n
    cdef double log_abs_d = log(cabs(d))
    cdef double arg_d = fmod(carg(d) + TWO_PI, TWO_PI)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w_norms = \
        np.linalg.norm(w, axis=1).astype(np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] z_norms = \
        np.linalg.norm(z, axis=1).astype(np.float64)

    cdef int ell, k, j, i, K, a, modulus
    cdef long long ell_c
    cdef double theta, t, mu, nx, best, acc, dist
    cdef double complex b, bp, s, g0, g, rot, diff
    cdef list out = []

    modulus = (r if r > 0 else -r) * m
    for ell in range(modulus):
        for k in range(n):
            theta = TWO_PI * ell / (n * r) + TWO_PI * k / n
            t = fmod(n * theta, TWO_PI)
            if t < 0:
                t += TWO_PI
            t = t / n
            b = cexp(1j * (theta - t))
            bp = b if eps == 1 else conj(b)
            mu = n * r * t / TWO_PI
            s = cexp(1j * sigma * t) * exp(mu * log_abs_d) * cexp(1j * mu * arg_d) * bp
            ok = True
            for j in range(nsamp):
                nx = cabs(s) * w_norms[j]
                ell_c = llround(log(nx / z_norms[j]) / log_abs_d)
                best = 1e300
                for a in range(-1, 2):
                    g0 = cexp((ell_c + a) * (log_abs_d + 1j * arg_d))
                    for K in range(m):
                        rot = cexp(1j * (TWO_PI * K / m))
                        g = g0 * rot
                        acc = 0.0
                        for i in range(dim):
                            diff = s * w[j, i] - g * z[j, i]
                            acc += diff.real * diff.real + diff.imag * diff.imag
                        dist = sqrt(acc) / nx
                        if dist < best:
                            best = dist
                if best >= tol:
                    ok = False
                    break
            if ok:
                out.append((ell, k))
    return out
