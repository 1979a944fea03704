"""Index-2 extensions G = <A, x | x^2 = y, x a x^-1 = f(a)> of an abelian group.

An element ``x^flag * a`` is stored as ``ExtElement(flag, a)``.  The canonical
ordering of G lists A (lexicographic coordinates) and then xA; element index
``g`` is ``flag * |A| + index(a)``, and bit ``k`` of a connection-set mask
refers to element index ``k + 1`` (the identity has no bit).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from mixcayley.abelian import (
    AbelianGroup,
    AbElement,
    Automorphism,
    characters,
    format_element,
    quotient,
    subgroup_B,
)
from mixcayley.errors import GroupSpecError, PreconditionError, StructuralError


class ExtElement(NamedTuple):
    flag: int
    a: AbElement


@dataclass(frozen=True)
class ExtGroup:
    A: AbelianGroup
    f: Automorphism
    y: AbElement
    name: str = field(default="", compare=False)

    def __post_init__(self):
        A = self.A
        y = A.check(self.y)
        object.__setattr__(self, "y", y)
        if self.f.group != A:
            raise StructuralError("f is defined on a different group")
        if A.order < 3:
            raise StructuralError("|A| < 3: the abelian subgroup must have order at least 3")
        if self.f.is_identity():
            raise StructuralError("f = identity: G would be abelian")
        if not self.f.is_involution():
            raise StructuralError("f not involutive")
        if self.f(y) != y:
            raise StructuralError("f(y) ≠ y")

    def __str__(self):
        return self.name or f"generic({self.A}; y={format_element(self.y)})"

    # sizes and derived subgroups
    @property
    def order(self) -> int:
        return 2 * self.A.order

    @cached_property
    def B(self) -> frozenset:
        return subgroup_B(self.A, self.f)

    @cached_property
    def quotient(self):
        return quotient(self.A, self.B)

    @property
    def index_AB(self) -> int:
        return self.A.order // len(self.B)

    @cached_property
    def m(self) -> int:
        """Working cyclotomic order: holds i, every character value and sqrt(pi(y))."""
        return math.lcm(4, 2 * self.A.exponent)

    @property
    def is_inversion(self) -> bool:
        return self.f.is_inversion()

    @property
    def is_dihedral(self) -> bool:
        return self.is_inversion and self.y == self.A.identity

    @property
    def is_dicyclic(self) -> bool:
        return self.is_inversion and self.y != self.A.identity

    # elements
    @cached_property
    def elements(self) -> tuple[ExtElement, ...]:
        els = self.A.elements
        return tuple(ExtElement(0, a) for a in els) + tuple(ExtElement(1, a) for a in els)

    @property
    def identity(self) -> ExtElement:
        return ExtElement(0, self.A.identity)

    def index(self, g: ExtElement) -> int:
        flag, a = g
        return flag * self.A.order + self.A.index(a)

    def mul(self, g: ExtElement, h: ExtElement) -> ExtElement:
        A, f = self.A, self.f
        (e1, a), (e2, b) = g, h
        if e2 == 0:
            return ExtElement(e1, A.mul(a, b))
        if e1 == 0:
            return ExtElement(1, A.mul(f(a), b))
        return ExtElement(0, A.mul(self.y, A.mul(f(a), b)))

    def inv(self, g: ExtElement) -> ExtElement:
        A = self.A
        flag, a = g
        if flag == 0:
            return ExtElement(0, A.inv(a))
        return ExtElement(1, A.mul(A.inv(self.y), self.f(A.inv(a))))

    # index tables used by the hot paths
    @cached_property
    def mul_table(self) -> np.ndarray:
        n = self.order
        els = self.elements
        tab = np.empty((n, n), dtype=np.intp)
        for i, g in enumerate(els):
            for j, h in enumerate(els):
                tab[i, j] = self.index(self.mul(g, h))
        return tab

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        return tuple(self.index(self.inv(g)) for g in self.elements)

    @cached_property
    def left_quotient_table(self) -> np.ndarray:
        """Entry [g, h] is the index of g^-1 h."""
        inv = np.asarray(self.inv_table, dtype=np.intp)
        return self.mul_table[inv, :]

    @cached_property
    def a_inv(self) -> tuple[int, ...]:
        A = self.A
        return tuple(A.index(A.inv(a)) for a in A.elements)

    @cached_property
    def a_mul_y(self) -> tuple[int, ...]:
        A = self.A
        return tuple(A.index(A.mul(self.y, a)) for a in A.elements)

    @cached_property
    def char_exps(self) -> tuple[tuple[int, ...], ...]:
        """For each character (lexicographic order), exponents of pi(a) in Z[zeta_m]."""
        A = self.A
        k = self.m // A.exponent
        return tuple(tuple(pi.root_index(a) * k for a in A.elements)
                     for pi in characters(A))

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen = set()
        classes = []
        tab = self.mul_table
        inv = self.inv_table
        for g in range(self.order):
            if g in seen:
                continue
            cls = sorted({int(tab[tab[h, g], inv[h]]) for h in range(self.order)})
            seen.update(cls)
            classes.append(tuple(cls))
        return classes

    def format(self, g: ExtElement | int) -> str:
        """Render an element as 1, a^k, x, x*a^k (cyclic A) or with coordinates."""
        if isinstance(g, (int, np.integer)):
            g = self.elements[int(g)]
        flag, a = g
        if self.A.rank == 1:
            k = a[0]
            body = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
        else:
            body = "" if a == self.A.identity else "(" + format_element(a) + ")"
        if flag:
            return "x*" + body if body else "x"
        return body or "1"

    # connection sets
    def connection_set(self, elements: Iterable[ExtElement | int]) -> "ConnectionSet":
        mask = 0
        for g in elements:
            idx = int(g) if isinstance(g, (int, np.integer)) else self.index(g)
            if idx == 0:
                raise PreconditionError("the identity cannot belong to a connection set")
            mask |= 1 << (idx - 1)
        return split_connection_set(self, mask)

    def inverse_pairs(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Non-identity involutions and the pairs {g, g^-1} with g != g^-1."""
        inv = self.inv_table
        invols, pairs = [], []
        for g in range(1, self.order):
            h = inv[g]
            if h == g:
                invols.append(g)
            elif g < h:
                pairs.append((g, h))
        return invols, pairs


def ext_mul(G: ExtGroup, g: ExtElement, h: ExtElement) -> ExtElement:
    return G.mul(g, h)


def ext_inv(G: ExtGroup, g: ExtElement) -> ExtElement:
    return G.inv(g)


# -- connection sets -------------------------------------------------------------

@dataclass(frozen=True)
class ConnectionSet:
    """S with its split S \\ T = S1 u xS2, T = T1 u xT2 (index tuples into A)."""

    group: ExtGroup = field(compare=False, repr=False)
    mask: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    t1: tuple[int, ...]
    t2: tuple[int, ...]

    @property
    def members(self) -> tuple[int, ...]:
        n = self.group.A.order
        return tuple(sorted(self.s1 + self.t1 + tuple(n + a for a in self.s2 + self.t2)))

    @property
    def antisymmetric_part(self) -> tuple[int, ...]:
        n = self.group.A.order
        return self.t1 + tuple(n + a for a in self.t2)

    @property
    def is_undirected(self) -> bool:
        return not self.t1 and not self.t2

    @property
    def is_directed(self) -> bool:
        return not self.s1 and not self.s2

    @property
    def kind(self) -> str:
        if self.is_undirected:
            return "undirected"
        if self.is_directed:
            return "directed"
        return "mixed"

    def part(self, name: str) -> frozenset:
        """One of 'S1', 'S2', 'T1', 'T2' as a set of A-elements."""
        els = self.group.A.elements
        return frozenset(els[i] for i in getattr(self, name.lower()))

    def describe(self) -> str:
        G = self.group
        return "{" + ", ".join(G.format(g) for g in self.members) + "}"


def split_connection_set(G: ExtGroup, mask: int) -> ConnectionSet:
    n = G.order
    if mask < 0 or mask >> (n - 1):
        raise StructuralError(f"mask {mask:#x} has bits outside G \\ {{1}}")
    members = [k + 1 for k in range(n - 1) if mask >> k & 1]
    in_s = set(members)
    inv = G.inv_table
    na = G.A.order
    s1, s2, t1, t2 = [], [], [], []
    for g in members:
        sym = inv[g] in in_s
        if g < na:
            (s1 if sym else t1).append(g)
        else:
            (s2 if sym else t2).append(g - na)
    cs = ConnectionSet(G, mask, tuple(s1), tuple(s2), tuple(t1), tuple(t2))
    _validate(cs)
    return cs


def _validate(cs: ConnectionSet) -> None:
    G = cs.group
    inv = G.inv_table
    na = G.A.order
    sym = set(cs.s1) | {na + a for a in cs.s2}
    if {inv[g] for g in sym} != sym:
        raise StructuralError("S \\ T is not closed under inversion")
    anti = set(cs.antisymmetric_part)
    if any(inv[g] in anti for g in anti):
        raise StructuralError("T meets T^-1")


# -- textual group specs ------------------------------------------------------------

class _Parser:
    _token = re.compile(r"(\d+)|([A-Za-z_]+)|(\S)")

    def __init__(self, text: str):
        self.text = text
        self.tokens = [(mt.group(0), mt.start()) for mt in self._token.finditer(text)]
        self.i = 0

    def fail(self, reason):
        pos = self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)
        raise GroupSpecError(reason, self.text, pos)

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            self.fail(f"unexpected end of input, expected {expected or 'token'}")
        if expected is not None and tok != expected:
            self.fail(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def integer(self):
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok is None or not tok.isdigit():
            self.fail("expected an integer")
        self.i += 1
        return sign * int(tok)

    def int_list(self):
        out = [self.integer()]
        while self.peek() == ",":
            self.take(",")
            out.append(self.integer())
        return out

    def factors(self):
        out = [self.integer()]
        while self.peek() == "x":
            self.take("x")
            out.append(self.integer())
        return out

    def done(self):
        if self.peek() is not None:
            self.fail(f"unexpected trailing input {self.peek()!r}")


def parse_group_spec(text: str) -> ExtGroup:
    """Parse ``dihedral(N)``, ``dicyclic(N1xN2;c1,c2)``, ``semidihedral(M)``,
    ``modular(M)`` or ``generic(N1x...; f=[...]; y=c1,...)``."""
    p = _Parser(text)
    family = p.take()
    if not family.isalpha():
        p.i -= 1
        p.fail("expected a family name")
    p.take("(")
    try:
        if family == "dihedral":
            n = p.integer()
            p.take(")")
            p.done()
            if n % 2 or n < 6:
                raise GroupSpecError(f"dihedral order must be even and >= 6, got {n}")
            A = AbelianGroup((n // 2,))
            G = ExtGroup(A, Automorphism.inversion(A), A.identity)
            canon = f"dihedral({n})"
        elif family == "dicyclic":
            factors = p.factors()
            p.take(";")
            y = p.int_list()
            p.take(")")
            p.done()
            A = AbelianGroup(tuple(factors))
            if A.exponent < 3:
                raise GroupSpecError("dicyclic needs exponent >= 3")
            if A.order % 2:
                raise GroupSpecError("dicyclic needs |A| even")
            y = A.check(y)
            if A.element_order(y) != 2:
                raise GroupSpecError("y must have order 2")
            G = ExtGroup(A, Automorphism.inversion(A), y)
            canon = f"dicyclic({'x'.join(map(str, factors))};{format_element(y)})"
        elif family in ("semidihedral", "modular"):
            M = p.integer()
            p.take(")")
            p.done()
            if M < 8 or M & (M - 1):
                raise GroupSpecError(f"{family} needs |A| a power of 2 and >= 8, got {M}")
            s = M // 2 - 1 if family == "semidihedral" else M // 2 + 1
            A = AbelianGroup((M,))
            G = ExtGroup(A, Automorphism.power_map(A, s), A.identity)
            canon = f"{family}({M})"
        elif family == "generic":
            factors = p.factors()
            p.take(";")
            p.take("f")
            p.take("=")
            p.take("[")
            A = AbelianGroup(tuple(factors))
            if p.peek() == "[":
                rows = []
                while True:
                    p.take("[")
                    rows.append(tuple(p.int_list()))
                    p.take("]")
                    if p.peek() != ",":
                        break
                    p.take(",")
                p.take("]")
                if any(len(r) != A.rank for r in rows):
                    raise GroupSpecError("f matrix rows must have one entry per factor")
                f = Automorphism(A, tuple(A.reduce(r) for r in rows))
                ftxt = "[" + ",".join("[" + ",".join(map(str, A.reduce(r))) + "]" for r in rows) + "]"
            else:
                rs = p.int_list()
                p.take("]")
                f = Automorphism.diagonal(A, rs)
                ftxt = "[" + ",".join(map(str, rs)) + "]"
            p.take(";")
            p.take("y")
            p.take("=")
            y = p.int_list()
            p.take(")")
            p.done()
            if len(y) != A.rank:
                raise GroupSpecError(f"y needs {A.rank} coordinates")
            G = ExtGroup(A, f, A.reduce(y))
            canon = f"generic({'x'.join(map(str, factors))};f={ftxt};y={format_element(G.y)})"
        else:
            p.i = 0
            p.fail(f"unknown group family {family!r}")
    except StructuralError as exc:
        raise GroupSpecError(str(exc), text) from exc
    object.__setattr__(G, "name", canon)
    return G


# -- set expressions ("a,x*a^2", "(1,0),x*(0,3)") -----------------------------------

_SET_ITEM = re.compile(
    r"""^(?P<x>x)?\s*\*?\s*
        (?:(?P<one>1|e)|a(?:\s*\^\s*(?P<k>-?\d+))?|\((?P<coords>[-\d,\s]+)\))?$""",
    re.VERBOSE)


def parse_set_expression(G: ExtGroup, text: str) -> ConnectionSet:
    """Parse a comma list of elements into a connection set.

    Elements: ``a^k`` / ``x*a^k`` for cyclic A, ``(c1,c2)`` / ``x*(c1,c2)`` for
    any A; ``x`` alone is x.  An empty string is the empty set.
    """
    text = text.strip()
    if not text:
        return split_connection_set(G, 0)
    items, depth, cur, starts = [], 0, "", []
    pos = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append((cur, pos - len(cur)))
            cur = ""
        else:
            cur += ch
        pos += 1
    items.append((cur, pos - len(cur)))
    A = G.A
    chosen = []
    for raw, start in items:
        item = raw.strip()
        mt = _SET_ITEM.match(item)
        if not item or not mt:
            raise GroupSpecError(f"cannot parse element {item!r}", text, start)
        flag = 1 if mt.group("x") else 0
        if mt.group("one"):
            if flag:
                raise GroupSpecError(f"cannot parse element {item!r}", text, start)
            a = A.identity
        elif mt.group("coords") is not None:
            coords = [int(c) for c in mt.group("coords").split(",")]
            if len(coords) != A.rank:
                raise GroupSpecError(f"{item!r} needs {A.rank} coordinates", text, start)
            a = A.reduce(coords)
        elif item.lstrip("x* ").startswith("a"):
            if A.rank != 1:
                raise GroupSpecError("a^k notation needs a cyclic A; use coordinates", text, start)
            k = int(mt.group("k")) if mt.group("k") else 1
            a = A.reduce((k,))
        else:
            if not flag:
                raise GroupSpecError(f"cannot parse element {item!r}", text, start)
            a = A.identity
        g = ExtElement(flag, a)
        if G.index(g) == 0:
            raise GroupSpecError("the identity cannot belong to S", text, start)
        chosen.append(g)
    return G.connection_set(chosen)
