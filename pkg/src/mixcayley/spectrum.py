"""Hermitian adjacency spectra of mixed Cayley graphs, exactly and numerically.

The exact route block-diagonalizes the adjacency matrix over the irreducible
representations: each rep rho contributes the eigenvalues of

    sum_{s in S\\T} rho(s) + i sum_{t in T} rho(t) - i sum_{t in T} rho(t^-1)

with multiplicity dim(rho).  The numeric route diagonalizes the full
|G| x |G| matrix with a Jacobi eigensolver and never looks at representations.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from mixcayley import kernels
from mixcayley.cyclotomic import CycloInt, is_rational_integer, perfect_square_integer
from mixcayley.errors import ConvergenceError, StructuralError
from mixcayley.group import ConnectionSet, ExtGroup
from mixcayley.reps import Rep, classify

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-8
INTEGRALITY_TOL = 1e-6


def adjacency(G: ExtGroup, cs: ConnectionSet) -> np.ndarray:
    """Hermitian adjacency matrix of Cay(G, S) in canonical vertex order.

    Entry (g, h) is 1 for an undirected edge, i for an arc g -> h only, -i for
    an arc h -> g only; arcs are the pairs with g^-1 h in S.
    """
    weight = np.zeros(G.order, dtype=complex)
    sym, anti = _split_indices(G, cs)
    weight[list(sym)] = 1.0
    weight[list(anti)] = 1j
    weight[[G.inv_table[t] for t in anti]] = -1j
    return weight[G.left_quotient_table]


def _split_indices(G: ExtGroup, cs: ConnectionSet):
    na = G.A.order
    sym = cs.s1 + tuple(na + a for a in cs.s2)
    return sym, cs.antisymmetric_part


def babai_blocks(G: ExtGroup, cs: ConnectionSet, reps: Sequence[Rep] | None = None):
    """For each rep, the dim x dim matrix whose eigenvalues it contributes."""
    reps = classify(G) if reps is None else reps
    sym, anti = _split_indices(G, cs)
    inv = G.inv_table
    m = G.m
    qi, q3 = m // 4, 3 * m // 4
    # (element, extra exponent): s -> 1, t -> i, t^-1 -> -i
    terms = [(s, 0) for s in sym] + [(t, qi) for t in anti] + [(inv[t], q3) for t in anti]
    blocks = []
    for rep in reps:
        ex = rep.exps
        if rep.dim == 1:
            c = [0] * m
            for g, k in terms:
                c[(ex[g] + k) % m] += 1
            blocks.append(((CycloInt(m, c),),))
            continue
        cells = [[0] * m for _ in range(4)]
        for g, k in terms:
            flag, t0, t1 = ex[g]
            if flag == 0:
                cells[0][(t0 + k) % m] += 1
                cells[3][(t1 + k) % m] += 1
            else:
                cells[1][(t0 + k) % m] += 1
                cells[2][(t1 + k) % m] += 1
        b = [CycloInt(m, c) for c in cells]
        blocks.append(((b[0], b[1]), (b[2], b[3])))
    return blocks


@dataclass
class BlockReport:
    label: int
    name: str
    dim: int
    integral: bool
    eigenvalues: tuple            # exact ints when integral, else floats
    value: Optional[CycloInt] = None          # dim 1: the scalar
    delta: Optional[CycloInt] = None          # dim 2: trace
    epsilon: Optional[CycloInt] = None        # dim 2: determinant
    discriminant: Optional[CycloInt] = None   # dim 2: delta^2 - 4 epsilon

    def to_dict(self) -> dict:
        d = {"label": self.label, "name": self.name, "dim": self.dim,
             "integral": self.integral, "eigenvalues": list(self.eigenvalues)}
        for key in ("value", "delta", "epsilon", "discriminant"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v.pretty()
        return d


@dataclass
class SpectrumReport:
    integral: bool
    eigenvalues: list                 # sorted; ints when integral, floats otherwise
    exact: list                       # per eigenvalue: int, or None if not an integer
    per_rep: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"integral": self.integral, "eigenvalues": self.eigenvalues,
                "exact": self.exact, "blocks": [b.to_dict() for b in self.per_rep]}


def _numeric_roots(delta: CycloInt, eps: CycloInt) -> tuple[float, float]:
    d = complex(delta)
    root = cmath.sqrt(d * d - 4 * complex(eps))
    lo, hi = sorted((((d - root) / 2).real, ((d + root) / 2).real))
    return lo, hi


def exact_spectrum(G: ExtGroup, cs: ConnectionSet,
                   reps: Sequence[Rep] | None = None) -> SpectrumReport:
    reps = classify(G) if reps is None else reps
    blocks = babai_blocks(G, cs, reps)
    per_rep = []
    exact = []
    approx = []
    for rep, blk in zip(reps, blocks):
        if rep.dim == 1:
            v = blk[0][0]
            n = is_rational_integer(v)
            if n is not None:
                br = BlockReport(rep.label, rep.name, 1, True, (n,), value=v)
            else:
                br = BlockReport(rep.label, rep.name, 1, False, (complex(v).real,), value=v)
            exact.append(n)
            approx.append(br.eigenvalues[0])
            per_rep.append(br)
            continue
        (a, b), (c, d) = blk
        delta = a + d
        eps = a * d - b * c
        disc = delta * delta - 4 * eps
        dn = is_rational_integer(delta)
        root = perfect_square_integer(disc) if dn is not None else None
        if root is not None:
            if (dn + root) % 2:
                raise ArithmeticError("trace and discriminant root differ in parity")
            eig = ((dn - root) // 2, (dn + root) // 2)
            br = BlockReport(rep.label, rep.name, 2, True, eig,
                             delta=delta, epsilon=eps, discriminant=disc)
            ex = list(eig)
        else:
            eig = _numeric_roots(delta, eps)
            br = BlockReport(rep.label, rep.name, 2, False, eig,
                             delta=delta, epsilon=eps, discriminant=disc)
            ex = [None, None]
        per_rep.append(br)
        # each two-dimensional rep occurs twice in the regular representation
        exact.extend(ex * 2)
        approx.extend(list(eig) * 2)
    if len(approx) != G.order:
        raise ArithmeticError(f"spectrum has {len(approx)} entries for |G|={G.order}")
    integral = all(b.integral for b in per_rep)
    if integral:
        eigenvalues = sorted(exact)
    else:
        eigenvalues = sorted(float(x) for x in approx)
    ints = sorted(x for x in exact if x is not None)
    return SpectrumReport(integral, eigenvalues, ints + [None] * (len(exact) - len(ints)), per_rep)


def numeric_spectrum(M: np.ndarray, tol: float = JACOBI_TOL,
                     max_sweeps: int = JACOBI_MAX_SWEEPS, kernel=None) -> list[float]:
    """Sorted eigenvalues of a Hermitian matrix via complex Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol``; every
    eigenpair is then checked against the input to within ``RESIDUAL_TOL``.
    ``kernel`` overrides the sweep routine (default: ``kernels.jacobi_sweeps``).
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise StructuralError(f"expected a square matrix, got shape {M.shape}")
    if not np.allclose(M, M.conj().T, rtol=0.0, atol=1e-12):
        raise StructuralError("matrix is not Hermitian")
    n = M.shape[0]
    if n == 0:
        return []
    ar = np.ascontiguousarray(M.real, dtype=np.float64)
    ai = np.ascontiguousarray(M.imag, dtype=np.float64)
    vr = np.eye(n)
    vi = np.zeros((n, n))
    sweep = kernels.jacobi_sweeps if kernel is None else kernel
    sweeps, off = sweep(ar, ai, vr, vi, tol, max_sweeps)
    if off >= tol:
        raise ConvergenceError(
            f"off-diagonal norm {off:.3e} after {sweeps} sweeps (tolerance {tol:.0e})")
    w = np.diag(ar).copy()
    V = vr + 1j * vi
    resid = np.abs(M @ V - V * w).max()
    if resid > RESIDUAL_TOL:
        raise ConvergenceError(f"eigenpair residual {resid:.3e} exceeds {RESIDUAL_TOL:.0e}")
    w.sort()
    return [float(x) for x in w]


def is_integral_numeric(eigs: Sequence[float], tol: float = INTEGRALITY_TOL) -> bool:
    return all(abs(x - round(x)) <= tol for x in eigs)


def rounded(eigs: Sequence[float]) -> list[int]:
    return sorted(int(round(x)) for x in eigs)
