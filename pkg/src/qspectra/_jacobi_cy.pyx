# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel.

Twin of _jacobi_py.jacobi_sweeps: identical rotation order, expression shapes,
and convergence test, compiled with -ffp-contract=off so both kernels produce
bit-identical diagonals.
"""

from libc.math cimport fabs, sqrt

DEF MAX_SWEEPS = 50
DEF TERMINATION_REL = 1e-12


cdef double _offdiag_sq(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double s = 0.0
    cdef double v
    cdef Py_ssize_t p, q
    for p in range(n - 1):
        for q in range(p + 1, n):
            v = a[p, q]
            s += 2.0 * (v * v)
    return s


def jacobi_sweeps(double[:, ::1] a):
    """Diagonalize a symmetric C-contiguous float64 matrix in place.

    Returns (sweeps, converged, off_frobenius, max_offdiag).
    """
    cdef Py_ssize_t n = a.shape[0]
    if n < 2:
        return 0, True, 0.0, 0.0
    cdef double fro_sq = 0.0
    cdef double v, apq, app, aqq, theta, t, c, s, new_pi, new_qi
    cdef double off_sq, threshold_sq, max_off
    cdef Py_ssize_t i, j, p, q, sweeps
    with nogil:
        for i in range(n):
            for j in range(n):
                v = a[i, j]
                fro_sq += v * v
        threshold_sq = (TERMINATION_REL * TERMINATION_REL) * fro_sq
        off_sq = _offdiag_sq(a, n)
        sweeps = 0
        while off_sq > threshold_sq and sweeps < MAX_SWEEPS:
            sweeps += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if -1.0e150 < theta < 1.0e150:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    else:
                        # asymptotic tangent; theta * theta would overflow
                        t = 0.5 / theta
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for i in range(n):
                        new_pi = c * a[p, i] - s * a[q, i]
                        new_qi = s * a[p, i] + c * a[q, i]
                        a[p, i] = new_pi
                        a[q, i] = new_qi
                        a[i, p] = new_pi
                        a[i, q] = new_qi
                    # pivot block set directly; the diagonal update form
                    # app - t*apq is the numerically stable one
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            off_sq = _offdiag_sq(a, n)
        max_off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                v = fabs(a[p, q])
                if v > max_off:
                    max_off = v
    return sweeps, off_sq <= threshold_sq, sqrt(off_sq), max_off
