"""Pure-Python cyclic Jacobi kernel.

Mirrors the compiled extension operation for operation: same rotation order,
same floating-point expression shapes, same convergence test, so both kernels
produce bit-identical diagonals. Row/column updates use numpy slices (each
element's arithmetic is unchanged); the convergence sums run as explicit loops
to keep summation order identical to the compiled kernel.
"""

import math

MAX_SWEEPS = 50
TERMINATION_REL = 1e-12  # off-diagonal Frobenius norm vs. input Frobenius norm


def _offdiag_sq(a, n):
    s = 0.0
    for p in range(n - 1):
        row = a[p]
        for q in range(p + 1, n):
            v = row[q]
            s += 2.0 * (v * v)
    return s


def jacobi_sweeps(a):
    """Diagonalize a symmetric C-contiguous float64 matrix in place.

    Returns (sweeps, converged, off_frobenius, max_offdiag).
    """
    n = a.shape[0]
    if n < 2:
        return 0, True, 0.0, 0.0
    fro_sq = 0.0
    for i in range(n):
        row = a[i]
        for j in range(n):
            v = row[j]
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
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                else:
                    # asymptotic tangent; theta * theta would overflow
                    t = 0.5 / theta
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[:, p] = a[p, :]
                a[:, q] = a[q, :]
                # pivot block set directly; the diagonal update form
                # app - t*apq is the numerically stable one
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        off_sq = _offdiag_sq(a, n)
    converged = off_sq <= threshold_sq
    max_off = 0.0
    for p in range(n - 1):
        row = a[p]
        for q in range(p + 1, n):
            v = abs(row[q])
            if v > max_off:
                max_off = v
    return sweeps, converged, math.sqrt(off_sq), max_off
