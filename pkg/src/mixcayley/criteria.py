"""Closed-form integrality criteria for mixed Cayley graphs.

``check_main`` decides integrality of Cay(G, S) from character sums alone:

(1) for every one-dimensional rep rho of G,
        rho(S1) + rho(x) rho(S2) - 2 Im rho(T1) - 2 Im(rho(x) rho(T2))
    is a rational integer;
(2) for every character pi of A nontrivial on B, delta(pi) is an integer and
    delta(pi)^2 - 4 epsilon(pi) is a perfect square, where

        alpha = pi(T1) - pi(T1^-1)
        beta  = pi(y f(T2)) - pi(T2^-1)
        gamma = pi(f(T1)) - pi(f(T1^-1))
        delta = pi(f(S1)) + pi(S1) + i (alpha + gamma)
        epsilon = pi(S1) pi(f(S1)) - pi(S2) pi(S2^-1)
                  + i (pi(S1) gamma + pi(f(S1)) alpha - beta pi(S2) + conj(beta) pi(S2^-1))
                  - alpha gamma - beta conj(beta).

``2 Im z`` is evaluated algebraically as ``-i (z - conj z)``, so nothing here
touches floating point.  The remaining checks are the specialised forms for
undirected sets, for f = inversion (generalized dihedral / dicyclic groups)
and for directed sets over those families.
"""
from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional, Sequence

from mixcayley.abelian import Character, atoms, characters, in_boolean_algebra
from mixcayley.cyclotomic import CycloInt, is_rational_integer, perfect_square_integer
from mixcayley.errors import PreconditionError
from mixcayley.group import ConnectionSet, ExtGroup
from mixcayley.reps import Rep, classify, orbit_representatives

ROUTES = ("main", "undirected", "s=-1", "dihedral-directed", "dicyclic-directed")


class Greek(NamedTuple):
    alpha: CycloInt
    beta: CycloInt
    gamma: CycloInt
    delta: CycloInt
    epsilon: CycloInt


@dataclass
class Check:
    """One tested quantity: ``test`` is 'integer', 'square', 'i-integer' or 'atoms'."""

    condition: str
    subject: str
    test: str
    quantity: Optional[CycloInt]
    result: Optional[int]
    ok: bool
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"condition": self.condition, "subject": self.subject, "test": self.test,
             "quantity": None if self.quantity is None else self.quantity.pretty(),
             "result": self.result, "ok": self.ok}
        for k, v in self.extra.items():
            d[k] = v.pretty() if isinstance(v, CycloInt) else v
        return d


@dataclass
class CriterionTrace:
    route: str
    checks: list
    overall: bool = field(init=False)

    def __post_init__(self):
        self.overall = all(c.ok for c in self.checks)

    def condition(self, name: str) -> list:
        return [c for c in self.checks if c.condition == name]

    @property
    def condition1(self) -> list:
        return self.condition("1")

    @property
    def condition2(self) -> list:
        return self.condition("2")

    @property
    def witness(self) -> Optional[Check]:
        """The first failing check, if any."""
        return next((c for c in self.checks if not c.ok), None)

    def to_dict(self) -> dict:
        w = self.witness
        return {"route": self.route, "overall": self.overall,
                "checks": [c.to_dict() for c in self.checks],
                "witness": None if w is None else w.to_dict()}


# -- character sums ---------------------------------------------------------------

class _Sums:
    """pi(X) for the pieces of a connection set, with a fixed character pi."""

    def __init__(self, G: ExtGroup, cs: ConnectionSet, pe: Sequence[int]):
        self.m = G.m
        self.pe = pe
        self.G = G
        self.cs = cs

    def of(self, idxs) -> CycloInt:
        pe = self.pe
        return CycloInt.from_exponents(self.m, (pe[i] for i in idxs))

    def inv(self, idxs):
        ai = self.G.a_inv
        return [ai[i] for i in idxs]

    def f(self, idxs):
        fp = self.G.f.perm
        return [fp[i] for i in idxs]

    def y(self, idxs):
        ym = self.G.a_mul_y
        return [ym[i] for i in idxs]


def _char_index(G: ExtGroup, pi: Character) -> int:
    return G.A.index(pi.exponents)


def greek_letters(G: ExtGroup, cs: ConnectionSet, pi: Character) -> Greek:
    """alpha, beta, gamma, delta, epsilon for a character nontrivial on B."""
    if pi.is_trivial_on(G.B):
        raise PreconditionError(f"{pi} is trivial on B")
    return _greek(G, cs, G.char_exps[_char_index(G, pi)])


def _greek(G: ExtGroup, cs: ConnectionSet, pe: Sequence[int]) -> Greek:
    P = _Sums(G, cs, pe)
    s1, s2, t1, t2 = cs.s1, cs.s2, cs.t1, cs.t2
    pS1 = P.of(s1)
    pfS1 = P.of(P.f(s1))
    pS2 = P.of(s2)
    pS2i = P.of(P.inv(s2))
    alpha = P.of(t1) - P.of(P.inv(t1))
    beta = P.of(P.y(P.f(t2))) - P.of(P.inv(t2))
    gamma = P.of(P.f(t1)) - P.of(P.f(P.inv(t1)))
    delta = pfS1 + pS1 + (alpha + gamma).times_i()
    cross = pS1 * gamma + pfS1 * alpha - beta * pS2 + beta.conj() * pS2i
    epsilon = pS1 * pfS1 - pS2 * pS2i + cross.times_i() - alpha * gamma - beta * beta.conj()
    return Greek(alpha, beta, gamma, delta, epsilon)


def _two_im(z: CycloInt) -> CycloInt:
    """2 Im(z) as an element of Z[zeta_m]: -i (z - conj z)."""
    return (z - z.conj()).times_i() * -1


def _integer_check(cond, subject, q, **extra) -> Check:
    n = is_rational_integer(q)
    return Check(cond, subject, "integer", q, n, n is not None, extra)


def _square_check(cond, subject, q, **extra) -> Check:
    r = perfect_square_integer(q)
    return Check(cond, subject, "square", q, r, r is not None, extra)


def _i_integer_check(cond, subject, q) -> Check:
    # q in iZ  <=>  -i q in Z
    n = is_rational_integer(q.times_i() * -1)
    return Check(cond, subject, "i-integer", q, n, n is not None)


def _one_dim(reps):
    return [r for r in reps if r.dim == 1]


def _condition_two_characters(G: ExtGroup, paranoid: bool) -> list[Character]:
    if paranoid:
        return [pi for pi in characters(G.A) if not pi.is_trivial_on(G.B)]
    return [pi for pi, _ in orbit_representatives(G)]


# -- the main criterion ----------------------------------------------------------------

def check_main(G: ExtGroup, cs: ConnectionSet, reps: Sequence[Rep] | None = None,
               paranoid: bool = False) -> CriterionTrace:
    """Integrality of Cay(G, S) by conditions (1) and (2) above.

    Condition (2) is checked on one character per {pi, pi o f} orbit, or on
    every character when ``paranoid`` is set.
    """
    reps = classify(G) if reps is None else reps
    m = G.m
    na = G.A.order
    checks = []
    for rho in _one_dim(reps):
        ex = rho.exps
        tx = ex[na]  # rho(x)
        val_s1 = CycloInt.from_exponents(m, (ex[i] for i in cs.s1))
        val_s2 = CycloInt.from_exponents(m, (ex[i] + tx for i in cs.s2))
        val_t1 = CycloInt.from_exponents(m, (ex[i] for i in cs.t1))
        val_t2 = CycloInt.from_exponents(m, (ex[i] + tx for i in cs.t2))
        q = val_s1 + val_s2 - _two_im(val_t1) - _two_im(val_t2)
        checks.append(_integer_check("1", rho.name, q))
    for pi in _condition_two_characters(G, paranoid):
        g = _greek(G, cs, G.char_exps[_char_index(G, pi)])
        disc = g.delta * g.delta - 4 * g.epsilon
        dn = is_rational_integer(g.delta)
        root = perfect_square_integer(disc) if dn is not None else None
        checks.append(Check("2", str(pi), "square", disc, root,
                            dn is not None and root is not None,
                            {"delta": g.delta, "epsilon": g.epsilon, "delta_int": dn}))
    return CriterionTrace("main", checks)


# -- corollaries ------------------------------------------------------------------------

def check_undirected(G: ExtGroup, cs: ConnectionSet, reps: Sequence[Rep] | None = None,
                     paranoid: bool = False) -> CriterionTrace:
    """Undirected form: (1) rho(S1) + rho(x) rho(S2) in Z for 1-dim rho; (2) for pi
    nontrivial on B, pi(f(S1)) + pi(S1) in Z and
    (pi(f(S1)) - pi(S1))^2 + 4 pi(S2) pi(S2^-1) a perfect square."""
    if not cs.is_undirected:
        raise PreconditionError("check_undirected needs S^-1 = S")
    reps = classify(G) if reps is None else reps
    m = G.m
    na = G.A.order
    checks = []
    for rho in _one_dim(reps):
        ex = rho.exps
        q = (CycloInt.from_exponents(m, (ex[i] for i in cs.s1))
             + CycloInt.from_exponents(m, (ex[na + i] for i in cs.s2)))
        checks.append(_integer_check("1", rho.name, q))
    for pi in _condition_two_characters(G, paranoid):
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        pS1, pfS1 = P.of(cs.s1), P.of(P.f(cs.s1))
        checks.append(_integer_check("2", str(pi), pS1 + pfS1))
        diff = pfS1 - pS1
        q = diff * diff + 4 * (P.of(cs.s2) * P.of(P.inv(cs.s2)))
        checks.append(_square_check("2", str(pi), q))
    return CriterionTrace("undirected", checks)


@lru_cache(maxsize=64)
def _square_kernel_split(G: ExtGroup):
    """Characters with A^2 outside the kernel, split by whether y is in it."""
    A = G.A
    squares = {A.power(a, 2) for a in A.elements}
    y_in, y_out = [], []
    for pi in characters(A):
        if pi.is_trivial_on(squares):
            continue
        (y_in if pi.root_index(G.y) == 0 else y_out).append(pi)
    return tuple(y_in), tuple(y_out)


def check_s_minus_one(G: ExtGroup, cs: ConnectionSet, reps: Sequence[Rep] | None = None) -> CriterionTrace:
    """f(a) = a^-1: (1) S1 is a union of atoms; (2) for pi with A^2 not in ker,
    y in ker: pi(S2) pi(S2^-1) - alpha^2 is a square; (3) for y not in ker:
    4 pi(T2) pi(T2^-1) - alpha^2 is a square, alpha = pi(T1) - pi(T1^-1)."""
    if not G.is_inversion:
        raise PreconditionError("check_s_minus_one needs f(a) = a^-1")
    A = G.A
    els = A.elements
    s1 = {els[i] for i in cs.s1}
    ok = in_boolean_algebra(A, s1)
    checks = [Check("1", "S1", "atoms", None, None, ok)]
    y_in, y_out = _square_kernel_split(G)
    for pi in y_in:
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        alpha = P.of(cs.t1) - P.of(P.inv(cs.t1))
        q = P.of(cs.s2) * P.of(P.inv(cs.s2)) - alpha * alpha
        checks.append(_square_check("2", str(pi), q))
    for pi in y_out:
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        alpha = P.of(cs.t1) - P.of(P.inv(cs.t1))
        q = 4 * (P.of(cs.t2) * P.of(P.inv(cs.t2))) - alpha * alpha
        checks.append(_square_check("3", str(pi), q))
    return CriterionTrace("s=-1", checks)


def check_dihedral_directed(G: ExtGroup, cs: ConnectionSet,
                            reps: Sequence[Rep] | None = None) -> CriterionTrace:
    """Directed S inside A over Dih(A): pi(S) - pi(S^-1) in iZ whenever A^2 is
    not in ker(pi)."""
    if not G.is_dihedral:
        raise PreconditionError("check_dihedral_directed needs a generalized dihedral group")
    if cs.s1 or cs.s2 or cs.t2:
        raise PreconditionError("S must be a subset of A with S and S^-1 disjoint")
    y_in, y_out = _square_kernel_split(G)
    checks = []
    for pi in y_in + y_out:
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        checks.append(_i_integer_check("1", str(pi), P.of(cs.t1) - P.of(P.inv(cs.t1))))
    return CriterionTrace("dihedral-directed", checks)


def check_dicyclic_directed(G: ExtGroup, cs: ConnectionSet,
                            reps: Sequence[Rep] | None = None) -> CriterionTrace:
    """Directed S over Dic(A, y): (a) pi(T1) - pi(T1^-1) in iZ for pi with A^2 not
    in ker and y in ker; (b) 4 pi(T2) pi(T2^-1) - (pi(T1) - pi(T1^-1))^2 a
    square for pi with y not in ker."""
    if not G.is_dicyclic:
        raise PreconditionError("check_dicyclic_directed needs a generalized dicyclic group")
    if not cs.is_directed:
        raise PreconditionError("S must satisfy s^-1 not in S for every s in S")
    y_in, y_out = _square_kernel_split(G)
    checks = []
    for pi in y_in:
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        checks.append(_i_integer_check("a", str(pi), P.of(cs.t1) - P.of(P.inv(cs.t1))))
    for pi in y_out:
        P = _Sums(G, cs, G.char_exps[_char_index(G, pi)])
        alpha = P.of(cs.t1) - P.of(P.inv(cs.t1))
        q = 4 * (P.of(cs.t2) * P.of(P.inv(cs.t2))) - alpha * alpha
        checks.append(_square_check("b", str(pi), q))
    return CriterionTrace("dicyclic-directed", checks)


def applicable_corollaries(G: ExtGroup, cs: ConnectionSet) -> list:
    """The corollary checks whose preconditions hold for (G, S)."""
    out = []
    if cs.is_undirected:
        out.append(check_undirected)
    if G.is_inversion:
        out.append(check_s_minus_one)
        if G.is_dihedral and not (cs.s1 or cs.s2 or cs.t2):
            out.append(check_dihedral_directed)
        if G.is_dicyclic and cs.is_directed:
            out.append(check_dicyclic_directed)
    return out


# -- generator of guaranteed-integral undirected sets -------------------------------------

def _atom_unions(G: ExtGroup):
    A = G.A
    return [frozenset(A.index(a) for a in at.members) for at in atoms(A)]


def simple_set_space(G: ExtGroup, require_f_stable: bool = True):
    """Admissible (S1, S2) halves: unions of atoms with 1 not in S1,
    f(S1) = S1 and f(S2) = y^-1 S2.

    Returns two lists of frozensets of A-indices.  With ``require_f_stable``
    False the f-conditions are dropped (S2 must still satisfy yS2 = S2).
    """
    A = G.A
    ats = _atom_unions(G)
    ident = A.index(A.identity)
    fp = G.f.perm
    yinv = A.index(A.inv(G.y))
    ymul = [A.index(A.mul(A.elements[yinv], a)) for a in A.elements]
    ym = G.a_mul_y
    if len(ats) > 20:
        raise PreconditionError(f"{len(ats)} atoms: too many to enumerate unions")
    s1_opts, s2_opts = [], []
    for bits in range(1 << len(ats)):
        u = frozenset().union(*(ats[k] for k in range(len(ats)) if bits >> k & 1))
        fu = frozenset(fp[i] for i in u)
        if ident not in u and (not require_f_stable or fu == u):
            s1_opts.append(u)
        if require_f_stable:
            if fu == frozenset(ymul[i] for i in u):
                s2_opts.append(u)
        elif frozenset(ym[i] for i in u) == u:
            s2_opts.append(u)
    return s1_opts, s2_opts


def coro_simple_generator(G: ExtGroup, seed: int = 0, budget: int = 1000,
                          require_f_stable: bool = True) -> Iterator[ConnectionSet]:
    """Undirected sets S1 u xS2 built from atoms, which are always integral.

    Emits every admissible pair when there are at most ``budget`` of them,
    otherwise ``budget`` distinct pairs; the order is a seeded shuffle.
    """
    s1_opts, s2_opts = simple_set_space(G, require_f_stable)
    total = len(s1_opts) * len(s2_opts)
    rng = random.Random(seed)
    na = G.A.order
    for k in rng.sample(range(total), min(total, budget)):
        s1 = s1_opts[k // len(s2_opts)]
        s2 = s2_opts[k % len(s2_opts)]
        yield G.connection_set(sorted(s1) + [na + i for i in sorted(s2)])
