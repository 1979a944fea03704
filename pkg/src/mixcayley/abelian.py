"""Finite abelian groups given as products of cyclic factors.

Elements are plain tuples of residues, ``(c1, ..., ck)`` with ``0 <= ci < ni``;
the group law is written multiplicatively in the API but is componentwise
addition.  Characters are indexed by dual vectors and evaluated as roots of
unity of order ``exponent(A)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from mixcayley.cyclotomic import CycloInt
from mixcayley.errors import PreconditionError, StructuralError

AbElement = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """A = Z/n1 x ... x Z/nk."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors:
            raise StructuralError("an abelian group needs at least one factor")
        if any(n < 2 for n in factors):
            raise StructuralError(f"cyclic factors must be >= 2, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def order(self) -> int:
        return math.prod(self.factors)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.factors)

    @property
    def identity(self) -> AbElement:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple[AbElement, ...]:
        """All elements in lexicographic coordinate order."""
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    @cached_property
    def _index(self) -> dict:
        return {a: i for i, a in enumerate(self.elements)}

    def index(self, a: AbElement) -> int:
        return self._index[tuple(a)]

    def check(self, a) -> AbElement:
        a = tuple(a)
        if len(a) != self.rank:
            raise StructuralError(
                f"element {a} has {len(a)} coordinates, group has rank {self.rank}")
        if any(not 0 <= c < n for c, n in zip(a, self.factors)):
            raise StructuralError(f"element {a} is not reduced for {self.factors}")
        return a

    def reduce(self, coords) -> AbElement:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise StructuralError(
                f"element {coords} has {len(coords)} coordinates, group has rank {self.rank}")
        return tuple(c % n for c, n in zip(coords, self.factors))

    def mul(self, a: AbElement, b: AbElement) -> AbElement:
        if len(a) != self.rank or len(b) != self.rank:
            raise StructuralError("dimension mismatch in group product")
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def inv(self, a: AbElement) -> AbElement:
        return tuple(-x % n for x, n in zip(a, self.factors))

    def power(self, a: AbElement, j: int) -> AbElement:
        return tuple(x * j % n for x, n in zip(a, self.factors))

    def element_order(self, a: AbElement) -> int:
        return math.lcm(*(n // math.gcd(x, n) for x, n in zip(a, self.factors)))

    def generated(self, a: AbElement) -> frozenset:
        """The cyclic subgroup <a>."""
        return frozenset(self.power(a, j) for j in range(self.element_order(a)))

    def __str__(self):
        return " x ".join(f"Z/{n}" for n in self.factors)


def format_element(a: AbElement) -> str:
    return ",".join(str(c) for c in a)


def ab_mul(A: AbelianGroup, a: AbElement, b: AbElement) -> AbElement:
    return A.mul(a, b)


def element_order(A: AbelianGroup, a: AbElement) -> int:
    return A.element_order(a)


# -- automorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """An automorphism given by the images of the standard generators.

    ``images[i]`` is the image of the i-th unit vector; the map acts on an
    element by ``f(a) = sum_i a_i * images[i]``.
    """

    group: AbelianGroup
    images: tuple[AbElement, ...]

    def __post_init__(self):
        A = self.group
        images = tuple(A.check(im) for im in self.images)
        if len(images) != A.rank:
            raise StructuralError(
                f"need {A.rank} generator images, got {len(images)}")
        for i, (im, n) in enumerate(zip(images, A.factors)):
            if n % A.element_order(im):
                raise StructuralError(
                    f"f not a homomorphism: image of generator {i} has order "
                    f"{A.element_order(im)}, which does not divide {n}")
        object.__setattr__(self, "images", images)
        if len(set(self.table)) != A.order:
            raise StructuralError("f not bijective")

    @classmethod
    def power_map(cls, A: AbelianGroup, r: int) -> "Automorphism":
        """a -> a^r."""
        return cls.diagonal(A, [r] * A.rank)

    @classmethod
    def diagonal(cls, A: AbelianGroup, rs: Sequence[int]) -> "Automorphism":
        """Generator i -> generator i raised to rs[i]."""
        if len(rs) != A.rank:
            raise StructuralError(f"need {A.rank} exponents, got {len(rs)}")
        images = []
        for i, r in enumerate(rs):
            e = [0] * A.rank
            e[i] = r % A.factors[i]
            images.append(tuple(e))
        return cls(A, tuple(images))

    @classmethod
    def inversion(cls, A: AbelianGroup) -> "Automorphism":
        return cls.power_map(A, -1)

    @cached_property
    def table(self) -> tuple[AbElement, ...]:
        """Images of A.elements, in order."""
        A = self.group
        out = []
        for a in A.elements:
            acc = [0] * A.rank
            for c, im in zip(a, self.images):
                if c:
                    for k in range(A.rank):
                        acc[k] += c * im[k]
            out.append(A.reduce(acc))
        return tuple(out)

    @cached_property
    def perm(self) -> tuple[int, ...]:
        """The permutation of element indices induced by f."""
        A = self.group
        return tuple(A.index(b) for b in self.table)

    def __call__(self, a: AbElement) -> AbElement:
        return self.table[self.group.index(a)]

    def is_identity(self) -> bool:
        return all(b == a for a, b in zip(self.group.elements, self.table))

    def is_involution(self) -> bool:
        p = self.perm
        return all(p[p[i]] == i for i in range(len(p)))

    def is_inversion(self) -> bool:
        A = self.group
        return all(b == A.inv(a) for a, b in zip(A.elements, self.table))


# -- subgroups and quotients ---------------------------------------------------

def subgroup_B(A: AbelianGroup, f: Automorphism) -> frozenset:
    """{ f(a) a^-1 : a in A }."""
    return frozenset(A.mul(f(a), A.inv(a)) for a in A.elements)


def is_subgroup(A: AbelianGroup, H: Iterable[AbElement]) -> bool:
    H = set(H)
    if A.identity not in H:
        return False
    return all(A.mul(a, A.inv(b)) in H for a in H for b in H)


@dataclass(frozen=True)
class QuotientGroup:
    group: AbelianGroup
    subgroup: frozenset
    cosets: tuple[frozenset, ...]
    coset_of: dict = field(compare=False, repr=False)

    @property
    def index(self) -> int:
        return len(self.cosets)

    @property
    def representatives(self) -> tuple[AbElement, ...]:
        return tuple(min(c) for c in self.cosets)


def quotient(A: AbelianGroup, B: Iterable[AbElement]) -> QuotientGroup:
    """A/B with cosets listed in order of their smallest member."""
    B = frozenset(B)
    if not is_subgroup(A, B):
        raise StructuralError("B is not a subgroup of A")
    cosets = []
    coset_of = {}
    for a in A.elements:
        if a in coset_of:
            continue
        coset = frozenset(A.mul(a, b) for b in B)
        for c in coset:
            coset_of[c] = len(cosets)
        cosets.append(coset)
    return QuotientGroup(A, B, tuple(cosets), coset_of)


# -- characters -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Character:
    """pi(a) = zeta_e ** sum_i k_i a_i (e / n_i), with e = exponent(A)."""

    exponents: tuple[int, ...]
    group: AbelianGroup = field(compare=False, repr=False)

    def root_index(self, a: AbElement) -> int:
        """t such that pi(a) = zeta_e^t."""
        e = self.group.exponent
        return sum(k * c * (e // n) for k, c, n in
                   zip(self.exponents, a, self.group.factors)) % e

    def value(self, a: AbElement, m: int | None = None) -> CycloInt:
        e = self.group.exponent
        m = e if m is None else m
        if m % e:
            raise StructuralError(f"ring order {m} does not contain zeta_{e}")
        return CycloInt.root(m, self.root_index(a) * (m // e))

    def sum_over(self, S: Iterable[AbElement], m: int | None = None) -> CycloInt:
        """pi(S) = sum of pi(s) over s in S."""
        e = self.group.exponent
        m = e if m is None else m
        k = m // e
        return CycloInt.from_exponents(m, (self.root_index(s) * k for s in S))

    def is_trivial_on(self, H: Iterable[AbElement]) -> bool:
        return all(self.root_index(h) == 0 for h in H)

    def compose(self, f: Automorphism) -> "Character":
        """pi o f, again expressed as a dual vector."""
        A = self.group
        e = A.exponent
        exps = []
        for im, n in zip(f.images, A.factors):
            exps.append(self.root_index(im) // (e // n))
        return Character(tuple(exps), A)

    def __str__(self):
        return "chi(" + ",".join(map(str, self.exponents)) + ")"


def characters(A: AbelianGroup) -> list[Character]:
    """All |A| characters, ordered lexicographically by dual vector."""
    return [Character(k, A) for k in A.elements]


def characters_nontrivial_on_B(A: AbelianGroup, B: Iterable[AbElement]) -> list[Character]:
    B = tuple(B)
    return [pi for pi in characters(A) if not pi.is_trivial_on(B)]


def characters_trivial_on_B(A: AbelianGroup, B: Iterable[AbElement]) -> list[Character]:
    B = tuple(B)
    return [pi for pi in characters(A) if pi.is_trivial_on(B)]


# -- atoms and the Boolean algebra of subgroups ------------------------------------

@dataclass(frozen=True)
class Atom:
    representative: AbElement
    members: frozenset


@lru_cache(maxsize=None)
def atoms(A: AbelianGroup) -> tuple[Atom, ...]:
    """Classes of elements generating the same cyclic subgroup."""
    classes: dict[tuple, list] = {}
    for a in A.elements:
        key = tuple(sorted(A.generated(a)))
        classes.setdefault(key, []).append(a)
    out = [Atom(min(ms), frozenset(ms)) for ms in classes.values()]
    out.sort(key=lambda at: A.index(at.representative))
    return tuple(out)


def in_boolean_algebra(A: AbelianGroup, S: Iterable[AbElement]) -> bool:
    """True iff S is a union of atoms."""
    S = frozenset(S)
    return all(at.members <= S or not (at.members & S) for at in atoms(A))


def power_closure_check(A: AbelianGroup, S: Iterable[AbElement], j: int) -> bool:
    """Whether S^j == S, for j coprime to exp(A)."""
    if j == 0 or math.gcd(j, A.exponent) != 1:
        raise PreconditionError(f"j={j} is not coprime to exponent {A.exponent}")
    S = frozenset(S)
    return frozenset(A.power(s, j) for s in S) == S
