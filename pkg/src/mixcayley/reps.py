"""Irreducible complex representations of an index-2 abelian extension.

Every irreducible representation has dimension 1 or 2:

* each character pi of A trivial on B lifts to two one-dimensional
  representations, rho(a) = pi(a) and rho(x) = +-sqrt(pi(y));
* each {pi, pi o f} orbit of characters nontrivial on B gives one
  two-dimensional representation

      R(a)  = [[pi(a), 0], [0, pi(f(a))]]
      R(xa) = [[0, pi(y f(a))], [pi(a), 0]].

All matrices are monomial with root-of-unity entries, so a representation is
stored as exponents in the group's working ring Z[zeta_m]; ``matrix`` expands
them to CycloInt matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from mixcayley.abelian import Automorphism, Character, characters
from mixcayley.cyclotomic import CycloInt, is_rational_integer
from mixcayley.errors import PreconditionError, StructuralError
from mixcayley.group import ExtGroup

Matrix = tuple  # tuple of rows of CycloInt


@dataclass(frozen=True)
class Rep:
    """An irreducible representation; ``label`` is its position in ``classify``.

    For dim 1, ``exps[g]`` is the exponent t with rho(g) = zeta_m^t.  For dim 2,
    ``exps[g] = (flag, t0, t1)``: diag(z^t0, z^t1) when flag is 0, otherwise
    [[0, z^t0], [z^t1, 0]].
    """

    label: int
    dim: int
    character: Character
    sign: int
    m: int
    exps: tuple = field(repr=False)

    @property
    def name(self) -> str:
        if self.dim == 1:
            return f"{self.character}{'+' if self.sign > 0 else '-'}"
        return f"R[{self.character}]"

    def scalar(self, g: int) -> CycloInt:
        if self.dim != 1:
            raise StructuralError("scalar() is only defined for one-dimensional reps")
        return CycloInt.root(self.m, self.exps[g])

    def matrix(self, g: int) -> Matrix:
        m = self.m
        if self.dim == 1:
            return ((CycloInt.root(m, self.exps[g]),),)
        flag, t0, t1 = self.exps[g]
        z = CycloInt.zero(m)
        if flag == 0:
            return ((CycloInt.root(m, t0), z), (z, CycloInt.root(m, t1)))
        return ((z, CycloInt.root(m, t0)), (CycloInt.root(m, t1), z))


def sqrt_of_unity(v: CycloInt) -> CycloInt:
    """A fixed square root of a root of unity zeta_m^t.

    Returns zeta_m^(t/2) for even t and zeta_m^((t+m)/2) for odd t, which
    requires m odd: for even m and odd t the root is a primitive root of
    order 2m and lies outside the ring.
    """
    t = root_exponent(v)
    m = v.order
    if t % 2 == 0:
        return CycloInt.root(m, t // 2)
    if m % 2 == 0:
        raise StructuralError(f"no square root of z^{t} in Z[zeta_{m}]")
    return CycloInt.root(m, (t + m) // 2)


def root_exponent(v: CycloInt) -> int:
    """t with v == zeta_m^t; StructuralError if v is not a root of unity."""
    m = v.order
    nz = [(t, a) for t, a in enumerate(v.coeffs) if a]
    if len(nz) == 1:
        t, a = nz[0]
        if a == 1:
            return t
        if a == -1 and m % 2 == 0:
            return (t + m // 2) % m
    red = v.reduced()
    for t in range(m):
        if CycloInt.root(m, t).reduced() == red:
            return t
    raise StructuralError(f"{v!r} is not a root of unity in Z[zeta_{m}]")


def _one_dim(G: ExtGroup, pi: Character, sign: int, label: int, branch: int) -> Rep:
    m = G.m
    k = m // G.A.exponent
    pe = [pi.root_index(a) * k for a in G.A.elements]
    root = sqrt_of_unity(CycloInt.root(m, pe[G.A.index(G.y)]))
    tx = root_exponent(root)
    if branch < 0:
        tx += m // 2
    if sign < 0:
        tx += m // 2
    tx %= m
    exps = tuple(pe) + tuple((tx + t) % m for t in pe)
    return Rep(label, 1, pi, sign, m, exps)


def _two_dim(G: ExtGroup, pi: Character, label: int) -> Rep:
    A = G.A
    m = G.m
    k = m // A.exponent
    pe = [pi.root_index(a) * k for a in A.elements]
    fp = G.f.perm
    ymul = G.a_mul_y
    diag = tuple((0, pe[i], pe[fp[i]]) for i in range(A.order))
    anti = tuple((1, pe[ymul[fp[i]]], pe[i]) for i in range(A.order))
    return Rep(label, 2, pi, 0, m, diag + anti)


def orbit_representatives(G: ExtGroup) -> list[tuple[Character, Character]]:
    """(pi, pi o f) for each orbit of B-nontrivial characters, pi the smaller."""
    seen = set()
    out = []
    for pi in characters(G.A):
        if pi.is_trivial_on(G.B) or pi.exponents in seen:
            continue
        mate = pi.compose(G.f)
        seen.update((pi.exponents, mate.exponents))
        out.append((pi, mate))
    return out


@lru_cache(maxsize=64)
def classify(G: ExtGroup, branch: int = 1) -> tuple[Rep, ...]:
    """All inequivalent irreducible representations of G, in a fixed order.

    One-dimensional reps come first: for each character of A/B (lexicographic)
    the + lift, then all the - lifts; then one two-dimensional rep per orbit.
    ``branch=-1`` flips the square-root choice, which swaps each +/- pair.
    """
    trivial_on_B = [pi for pi in characters(G.A) if pi.is_trivial_on(G.B)]
    reps = []
    for sign in (1, -1):
        for pi in trivial_on_B:
            reps.append(_one_dim(G, pi, sign, len(reps), branch))
    for pi, _ in orbit_representatives(G):
        reps.append(_two_dim(G, pi, len(reps)))
    return tuple(reps)


def character_of(rep: Rep) -> tuple[CycloInt, ...]:
    """The trace of rep at every group element, in canonical order."""
    m = rep.m
    if rep.dim == 1:
        return tuple(CycloInt.root(m, t) for t in rep.exps)
    out = []
    for flag, t0, t1 in rep.exps:
        out.append(CycloInt.zero(m) if flag else CycloInt.from_exponents(m, (t0, t1)))
    return tuple(out)


def inner_product(chi1: Sequence[CycloInt], chi2: Sequence[CycloInt]) -> CycloInt:
    """(chi1 | chi2) = 1/|G| sum chi1(g) conj(chi2(g)), computed exactly.

    Raises StructuralError carrying the residue when the sum is not divisible
    by |G| in Z[zeta_m].
    """
    if len(chi1) != len(chi2):
        raise StructuralError("class functions on different groups")
    n = len(chi1)
    total = sum((a * b.conj() for a, b in zip(chi1, chi2)), CycloInt.zero(chi1[0].order))
    red = total.reduced()
    if any(c % n for c in red):
        raise StructuralError(f"not divisible by |G|={n}; residue {total!r}")
    m = total.order
    return CycloInt(m, [c // n for c in red] + [0] * (m - len(red)))


def equivalent_characters(pi1: Character, pi2: Character, f: Automorphism,
                          B: Optional[frozenset] = None) -> bool:
    """Whether R_pi1 and R_pi2 are equivalent: pi2 == pi1 or pi2 == pi1 o f."""
    if B is not None and (pi1.is_trivial_on(B) or pi2.is_trivial_on(B)):
        raise PreconditionError("both characters must be nontrivial on B")
    return pi2.exponents == pi1.exponents or pi2.exponents == pi1.compose(f).exponents


def is_homomorphism(G: ExtGroup, rep: Rep) -> bool:
    """Exhaustive check of rep(gh) == rep(g) rep(h)."""
    tab = G.mul_table
    n = G.order
    mats = [rep.matrix(g) for g in range(n)]
    for g in range(n):
        for h in range(n):
            if _matmul(mats[g], mats[h]) != mats[int(tab[g, h])]:
                return False
    return True


def _matmul(p: Matrix, q: Matrix) -> Matrix:
    d = len(p)
    return tuple(tuple(sum((p[i][k] * q[k][j] for k in range(d)), CycloInt.zero(p[0][0].order))
                       for j in range(d)) for i in range(d))


def character_table(G: ExtGroup, reps: Sequence[Rep] | None = None):
    """(class representatives, class sizes, rows of character values)."""
    reps = classify(G) if reps is None else reps
    classes = G.conjugacy_classes()
    rows = []
    for rep in reps:
        chi = character_of(rep)
        rows.append([chi[c[0]] for c in classes])
    return [c[0] for c in classes], [len(c) for c in classes], rows


def as_int_or_none(v: CycloInt) -> Optional[int]:
    return is_rational_integer(v)
