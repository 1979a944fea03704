import itertools

import pytest

from mixcayley.abelian import AbelianGroup, Automorphism
from mixcayley.census import CATALOG
from mixcayley.errors import GroupSpecError, PreconditionError, StructuralError
from mixcayley.group import (
    ExtElement,
    ExtGroup,
    ext_inv,
    ext_mul,
    parse_group_spec,
    parse_set_expression,
    split_connection_set,
)

E = ExtElement


@pytest.fixture(scope="module", params=CATALOG)
def G(request):
    return parse_group_spec(request.param)


class TestConstruction:
    def test_dihedral8(self):
        G = parse_group_spec("dihedral(8)")
        assert G.A.factors == (4,) and G.f.is_inversion() and G.y == (0,)
        assert G.order == 8 and G.is_dihedral

    def test_dicyclic8(self):
        G = parse_group_spec("dicyclic(4; 2)")
        assert G.A.factors == (4,) and G.y == (2,) and G.is_dicyclic
        assert G.name == "dicyclic(4;2)"

    def test_generic_alias_of_dihedral(self):
        G = parse_group_spec("generic(4; f=[3]; y=0)")
        D = parse_group_spec("dihedral(8)")
        assert G == D

    def test_generic_matrix_form(self):
        G = parse_group_spec("generic(3x3; f=[[0,1],[1,0]]; y=1,1)")
        assert G.order == 18 and not G.is_inversion

    def test_semidihedral_and_modular(self):
        S = parse_group_spec("semidihedral(8)")
        M = parse_group_spec("modular(8)")
        assert S.f((1,)) == (3,) and M.f((1,)) == (5,)
        assert S.order == M.order == 16

    @pytest.mark.parametrize("text,reason", [
        ("generic(4; f=[1]; y=0)", "f = identity"),
        ("generic(8; f=[3]; y=1)", "f(y) ≠ y"),
        ("generic(2x2; f=[[0,1],[1,1]]; y=0,0)", "f not involutive"),
        ("dihedral(7)", "even"),
        ("dihedral(4)", ">= 6"),
        ("dicyclic(4; 1)", "order 2"),
        ("semidihedral(12)", "power of 2"),
        ("generic(2; f=[1]; y=0)", "|A| < 3"),
    ])
    def test_invariant_violations(self, text, reason):
        with pytest.raises(GroupSpecError) as exc:
            parse_group_spec(text)
        assert reason in str(exc.value)

    @pytest.mark.parametrize("text", ["dihedral 8", "dihedral(8", "foo(3)", "dicyclic(4;)", "", "dihedral(8)x"])
    def test_syntax_errors_carry_position(self, text):
        with pytest.raises(GroupSpecError) as exc:
            parse_group_spec(text)
        assert exc.value.reason

    def test_whitespace_insensitive(self):
        assert parse_group_spec(" dicyclic ( 2 x 4 ; 0 , 2 ) ") == parse_group_spec("dicyclic(2x4;0,2)")

    def test_direct_validation(self):
        A = AbelianGroup((4,))
        with pytest.raises(StructuralError, match="f = identity"):
            ExtGroup(A, Automorphism.power_map(A, 1), (0,))


class TestGroupLaw:
    def test_reflections_are_involutions(self):
        G = parse_group_spec("dihedral(8)")
        xa = E(1, (1,))
        assert ext_mul(G, E(1, (0,)), E(0, (1,))) == xa
        assert ext_mul(G, xa, xa) == E(0, (0,))
        assert ext_inv(G, xa) == xa

    def test_x_squared_is_y(self):
        G = parse_group_spec("dicyclic(4;2)")
        assert ext_mul(G, E(1, (0,)), E(1, (0,))) == E(0, (2,))

    def test_dicyclic_inverse(self):
        G = parse_group_spec("dicyclic(4;2)")
        for b in range(4):
            assert ext_inv(G, E(1, (b,))) == E(1, ((b + 2) % 4,))

    def test_axioms(self, G):
        n = G.order
        tab = G.mul_table
        for g in range(n):
            assert tab[0, g] == g == tab[g, 0]
            assert tab[g, G.inv_table[g]] == 0
        for g, h, k in itertools.product(range(n), repeat=3):
            assert tab[tab[g, h], k] == tab[g, tab[h, k]]

    def test_conjugation_by_x(self, G):
        x = E(1, G.A.identity)
        for a in G.A.elements:
            assert G.mul(G.mul(x, E(0, a)), G.inv(x)) == E(0, G.f(a))

    def test_element_order(self, G):
        assert G.elements[0] == E(0, G.A.identity)
        assert len(set(G.elements)) == G.order == 2 * G.A.order

    def test_conjugacy_classes_partition(self, G):
        classes = G.conjugacy_classes()
        assert sorted(g for c in classes for g in c) == list(range(G.order))


class TestConnectionSets:
    def test_symmetric_set(self):
        G = parse_group_spec("dihedral(8)")
        cs = parse_set_expression(G, "a,a^3")
        assert cs.s1 == (1, 3) and not (cs.s2 or cs.t1 or cs.t2)

    def test_single_rotation(self):
        G = parse_group_spec("dihedral(8)")
        cs = parse_set_expression(G, "a")
        assert cs.t1 == (1,) and not (cs.s1 or cs.s2 or cs.t2)
        assert cs.kind == "directed"

    def test_dicyclic_x(self):
        G = parse_group_spec("dicyclic(4;2)")
        cs = parse_set_expression(G, "x")
        assert cs.t2 == (0,) and cs.is_directed

    def test_coordinates(self):
        G = parse_group_spec("dicyclic(2x4;0,2)")
        cs = parse_set_expression(G, "(1,0), x*(0,1)")
        assert cs.members == (G.index(E(0, (1, 0))), G.index(E(1, (0, 1))))

    def test_identity_rejected(self):
        G = parse_group_spec("dihedral(8)")
        with pytest.raises(GroupSpecError, match="identity"):
            parse_set_expression(G, "a,1")
        with pytest.raises(PreconditionError):
            G.connection_set([0])

    def test_bad_element(self):
        G = parse_group_spec("dihedral(8)")
        with pytest.raises(GroupSpecError):
            parse_set_expression(G, "a,b")

    def test_mask_out_of_range(self):
        G = parse_group_spec("dihedral(8)")
        with pytest.raises(StructuralError):
            split_connection_set(G, 1 << 7)

    def test_split_invariants(self, G):
        inv = G.inv_table
        na = G.A.order
        masks = range(1 << (G.order - 1)) if G.order <= 12 else range(0, 1 << (G.order - 1), 97)
        for mask in masks:
            cs = split_connection_set(G, mask)
            S = {k + 1 for k in range(G.order - 1) if mask >> k & 1}
            assert set(cs.members) == S
            sym = set(cs.s1) | {na + a for a in cs.s2}
            T = set(cs.antisymmetric_part)
            assert {inv[g] for g in sym} == sym
            assert not T & {inv[t] for t in T}
            assert sym | T == S
            # inside A: S1^-1 = S1 and S2^-1 = y f(S2)
            assert set(cs.s1) == {G.a_inv[i] for i in cs.s1}
            assert {G.a_inv[i] for i in cs.s2} == {G.a_mul_y[G.f.perm[i]] for i in cs.s2}

    @pytest.mark.parametrize("spec", ["dihedral(8)", "dihedral(12)"])
    def test_antisymmetric_dihedral_sets_avoid_xA(self, spec):
        G = parse_group_spec(spec)
        inv = G.inv_table
        for mask in range(1 << (G.order - 1)):
            S = {k + 1 for k in range(G.order - 1) if mask >> k & 1}
            if all(inv[s] not in S for s in S):
                assert not split_connection_set(G, mask).t2

    def test_describe(self):
        G = parse_group_spec("dicyclic(4;2)")
        assert parse_set_expression(G, "x*a^2, a").describe() == "{a, x*a^2}"
