"""Pure-Python twin of the compiled Hermitian Jacobi kernel (same contract)."""
import math


def _off_norm(A):
    n = len(A)
    s = 0.0
    for i in range(n):
        row = A[i]
        for j in range(i + 1, n):
            z = row[j]
            s += z.real * z.real + z.imag * z.imag
    return math.sqrt(2.0 * s)


def jacobi_sweeps(ar, ai, vr, vi, tol, max_sweeps):
    """Diagonalize ar + i*ai in place, accumulating rotations into vr + i*vi."""
    A = (ar + 1j * ai).tolist()
    V = (vr + 1j * vi).tolist()
    n = len(A)
    sweep = 0
    off = _off_norm(A)
    while off >= tol and sweep < max_sweeps:
        for p in range(n - 1):
            Ap = A[p]
            for q in range(p + 1, n):
                apq = Ap[q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                Aq = A[q]
                phase = apq.conjugate() / mag
                theta = (Aq[q].real - Ap[p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                Ap[p] = complex(Ap[p].real - t * mag)
                Aq[q] = complex(Aq[q].real + t * mag)
                Ap[q] = Aq[p] = 0j
                for r in range(n):
                    if r != p and r != q:
                        Ar = A[r]
                        x = Ar[p]
                        y = Ar[q] * phase
                        z = c * x - s * y
                        Ar[p] = z
                        Ap[r] = z.conjugate()
                        z = s * x + c * y
                        Ar[q] = z
                        Aq[r] = z.conjugate()
                    Vr = V[r]
                    x = Vr[p]
                    y = Vr[q] * phase
                    Vr[p] = c * x - s * y
                    Vr[q] = s * x + c * y
        sweep += 1
        off = _off_norm(A)
    ar[:, :] = [[z.real for z in row] for row in A]
    ai[:, :] = [[z.imag for z in row] for row in A]
    vr[:, :] = [[z.real for z in row] for row in V]
    vi[:, :] = [[z.imag for z in row] for row in V]
    return sweep, off
