# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi sweeps for complex Hermitian matrices (compiled).

The matrix is held as separate real and imaginary parts.  Each rotation first
rotates the phase of column q so that a[p, q] becomes real, then applies a
real Givens rotation in the (p, q) plane.
"""
from libc.math cimport sqrt, fabs, hypot


cdef double _off_norm(double[:, ::1] ar, double[:, ::1] ai, Py_ssize_t n) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            s += ar[i, j] * ar[i, j] + ai[i, j] * ai[i, j]
    return sqrt(2.0 * s)


def jacobi_sweeps(double[:, ::1] ar, double[:, ::1] ai,
                  double[:, ::1] vr, double[:, ::1] vi,
                  double tol, int max_sweeps):
    """Diagonalize ar + i*ai in place, accumulating rotations into vr + i*vi.

    Returns (sweeps, off): sweeps performed and the Frobenius norm of what is
    left off the diagonal.
    """
    cdef Py_ssize_t n = ar.shape[0]
    cdef Py_ssize_t p, q, r
    cdef int sweep = 0
    cdef double off, mag, cr, ci, theta, t, c, s
    cdef double xr, xi, yr, yi, zr, zi
    with nogil:
        off = _off_norm(ar, ai, n)
        while off >= tol and sweep < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    mag = hypot(ar[p, q], ai[p, q])
                    if mag == 0.0:
                        continue
                    # e^{-i phi} with a[p, q] = mag e^{i phi}
                    cr = ar[p, q] / mag
                    ci = -ai[p, q] / mag
                    theta = (ar[q, q] - ar[p, p]) / (2.0 * mag)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    ar[p, p] -= t * mag
                    ar[q, q] += t * mag
                    ai[p, p] = 0.0
                    ai[q, q] = 0.0
                    ar[p, q] = 0.0
                    ai[p, q] = 0.0
                    ar[q, p] = 0.0
                    ai[q, p] = 0.0
                    for r in range(n):
                        if r != p and r != q:
                            xr = ar[r, p]
                            xi = ai[r, p]
                            # y = a[r, q] * e^{-i phi}
                            yr = ar[r, q] * cr - ai[r, q] * ci
                            yi = ar[r, q] * ci + ai[r, q] * cr
                            zr = c * xr - s * yr
                            zi = c * xi - s * yi
                            ar[r, p] = zr
                            ai[r, p] = zi
                            ar[p, r] = zr
                            ai[p, r] = -zi
                            zr = s * xr + c * yr
                            zi = s * xi + c * yi
                            ar[r, q] = zr
                            ai[r, q] = zi
                            ar[q, r] = zr
                            ai[q, r] = -zi
                        xr = vr[r, p]
                        xi = vi[r, p]
                        yr = vr[r, q] * cr - vi[r, q] * ci
                        yi = vr[r, q] * ci + vi[r, q] * cr
                        vr[r, p] = c * xr - s * yr
                        vi[r, p] = c * xi - s * yi
                        vr[r, q] = s * xr + c * yr
                        vi[r, q] = s * xi + c * yi
            sweep += 1
            off = _off_norm(ar, ai, n)
    return sweep, off
