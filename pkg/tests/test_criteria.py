import pytest

from mixcayley.abelian import characters
from mixcayley.census import CATALOG
from mixcayley.criteria import (
    applicable_corollaries,
    check_dicyclic_directed,
    check_dihedral_directed,
    check_main,
    check_s_minus_one,
    check_undirected,
    coro_simple_generator,
    greek_letters,
    simple_set_space,
)
from mixcayley.errors import PreconditionError
from mixcayley.group import parse_group_spec, parse_set_expression, split_connection_set
from mixcayley.spectrum import exact_spectrum


def group_and_set(spec, text):
    G = parse_group_spec(spec)
    return G, parse_set_expression(G, text)


def nontrivial(G):
    return [pi for pi in characters(G.A) if not pi.is_trivial_on(G.B)]


class TestGreekLetters:
    def test_undirected_reduces(self):
        G, cs = group_and_set("semidihedral(8)", "a,a^3,a^5,a^7,x*a^2")
        for pi in nontrivial(G):
            g = greek_letters(G, cs, pi)
            assert g.alpha.is_zero() and g.beta.is_zero() and g.gamma.is_zero()
            pS1 = pi.sum_over(cs.part("S1"), G.m)
            pfS1 = pi.sum_over([G.f(a) for a in cs.part("S1")], G.m)
            pS2 = pi.sum_over(cs.part("S2"), G.m)
            pS2i = pi.sum_over([G.A.inv(a) for a in cs.part("S2")], G.m)
            assert g.delta == pS1 + pfS1
            assert g.epsilon == pS1 * pfS1 - pS2 * pS2i

    @pytest.mark.parametrize("spec", ["dihedral(8)", "dicyclic(4;2)", "dicyclic(2x4;0,2)"])
    def test_inversion_specialisation(self, spec):
        G = parse_group_spec(spec)
        for mask in range(0, 1 << (G.order - 1), 37):
            cs = split_connection_set(G, mask)
            for pi in nontrivial(G):
                g = greek_letters(G, cs, pi)
                assert g.gamma == -g.alpha
                assert g.delta == 2 * pi.sum_over(cs.part("S1"), G.m)
                t2_inv = pi.sum_over([G.A.inv(a) for a in cs.part("T2")], G.m)
                assert g.beta == t2_inv * (pi.value(G.y, G.m) - 1)

    def test_single_rotation_quaternion(self):
        G, cs = group_and_set("dicyclic(4;2)", "a")
        pi = characters(G.A)[1]
        assert complex(pi.value((1,))) == pytest.approx(1j)
        g = greek_letters(G, cs, pi)
        assert complex(g.alpha) == pytest.approx(2j)
        assert g.alpha * g.alpha == -4

    def test_precondition(self):
        G, cs = group_and_set("dihedral(8)", "a")
        with pytest.raises(PreconditionError):
            greek_letters(G, cs, characters(G.A)[0])


class TestMain:
    @pytest.mark.parametrize("text,integral", [
        ("a", True),
        ("a^3", True),
        ("", True),
        ("x,x*a", False),
        ("a,x", False),
        ("x*a^2", True),
    ])
    def test_quaternion_examples(self, text, integral):
        G, cs = group_and_set("dicyclic(4;2)", text)
        assert check_main(G, cs).overall is integral

    def test_two_element_T2_witness(self):
        G, cs = group_and_set("dicyclic(4;2)", "x,x*a")
        w = check_main(G, cs).witness
        assert w.condition == "2" and w.quantity == 32
        corollary = check_dicyclic_directed(G, cs)
        assert all(c.quantity == 8 and not c.ok for c in corollary.checks)

    def test_condition_lists(self):
        G, cs = group_and_set("dihedral(8)", "a")
        trace = check_main(G, cs)
        assert len(trace.condition1) == 4 and len(trace.condition2) == 1
        assert trace.overall == all(c.ok for c in trace.checks)
        d = trace.to_dict()
        assert d["route"] == "main" and d["witness"] is None

    @pytest.mark.parametrize("spec", CATALOG)
    def test_orbit_stability(self, spec):
        G = parse_group_spec(spec)
        for mask in range(0, 1 << (G.order - 1), 89):
            cs = split_connection_set(G, mask)
            full = check_main(G, cs, paranoid=True)
            verdicts = {c.subject: c.ok for c in full.condition2}
            for pi in nontrivial(G):
                assert verdicts[str(pi)] == verdicts[str(pi.compose(G.f))]
            assert full.overall == check_main(G, cs).overall

    def test_agrees_with_spectrum_exhaustively(self):
        for spec in ["dihedral(6)", "dihedral(8)", "dicyclic(4;2)", "dihedral(10)"]:
            G = parse_group_spec(spec)
            for mask in range(1 << (G.order - 1)):
                cs = split_connection_set(G, mask)
                assert check_main(G, cs).overall == exact_spectrum(G, cs).integral


class TestCorollaries:
    def test_undirected_examples(self):
        G, cs = group_and_set("dihedral(6)", "a,a^2")
        assert check_undirected(G, cs).overall
        G = parse_group_spec("modular(8)")
        full = split_connection_set(G, (1 << 15) - 1)
        assert check_undirected(G, full).overall

    def test_undirected_precondition(self):
        G, cs = group_and_set("dihedral(8)", "a")
        with pytest.raises(PreconditionError):
            check_undirected(G, cs)

    def test_s_minus_one(self):
        G, cs = group_and_set("dihedral(8)", "a")
        assert check_s_minus_one(G, cs).overall
        G, cs = group_and_set("semidihedral(8)", "a")
        with pytest.raises(PreconditionError):
            check_s_minus_one(G, cs)

    def test_s_minus_one_vacuous_third_condition_for_dihedral(self):
        G, cs = group_and_set("dihedral(12)", "a,x")
        assert not check_s_minus_one(G, cs).condition("3")

    def test_quaternion_has_no_condition_a(self):
        G, cs = group_and_set("dicyclic(4;2)", "a,x*a")
        trace = check_dicyclic_directed(G, cs)
        assert not trace.condition("a") and trace.condition("b")

    def test_dihedral_directed(self):
        G, cs = group_and_set("dihedral(8)", "a")
        trace = check_dihedral_directed(G, cs)
        assert trace.overall
        assert sorted(c.result for c in trace.checks) == [-2, 2]

    @pytest.mark.parametrize("spec", ["dihedral(6)", "dihedral(10)", "dihedral(14)"])
    def test_dihedral_2p_directed_never_integral(self, spec):
        G = parse_group_spec(spec)
        p = G.A.order
        for k in range(1, p):
            cs = parse_set_expression(G, f"a^{k}")
            assert not check_dihedral_directed(G, cs).overall

    def test_dihedral_directed_preconditions(self):
        G, cs = group_and_set("dicyclic(4;2)", "a")
        with pytest.raises(PreconditionError):
            check_dihedral_directed(G, cs)
        G, cs = group_and_set("dihedral(8)", "a,a^3")
        with pytest.raises(PreconditionError):
            check_dihedral_directed(G, cs)

    @pytest.mark.parametrize("text,integral", [("x*a^2", True), ("a,x", False), ("", True)])
    def test_dicyclic_directed(self, text, integral):
        G, cs = group_and_set("dicyclic(4;2)", text)
        assert check_dicyclic_directed(G, cs).overall is integral

    def test_dicyclic_directed_preconditions(self):
        G, cs = group_and_set("dicyclic(4;2)", "a,a^3")
        with pytest.raises(PreconditionError):
            check_dicyclic_directed(G, cs)
        G, cs = group_and_set("dihedral(8)", "a")
        with pytest.raises(PreconditionError):
            check_dicyclic_directed(G, cs)

    @pytest.mark.parametrize("spec", ["dicyclic(4;2)", "dicyclic(2x4;0,2)"])
    def test_symmetric_S2_sums_vanish_off_kernel_of_y(self, spec):
        G = parse_group_spec(spec)
        off_y = [pi for pi in characters(G.A) if pi.root_index(G.y) != 0]
        for mask in range(0, 1 << (G.order - 1), 7):
            cs = split_connection_set(G, mask)
            S2 = cs.part("S2")
            for pi in off_y:
                assert pi.sum_over(S2, G.m).is_zero()
                assert pi.sum_over([G.A.inv(a) for a in S2], G.m).is_zero()

    @pytest.mark.parametrize("spec", CATALOG)
    def test_routes_agree(self, spec):
        G = parse_group_spec(spec)
        for mask in range(0, 1 << (G.order - 1), 13):
            cs = split_connection_set(G, mask)
            main = check_main(G, cs).overall
            for corollary in applicable_corollaries(G, cs):
                assert corollary(G, cs).overall == main, corollary.__name__


class TestGenerator:
    @pytest.mark.parametrize("spec", CATALOG)
    def test_sound_and_undirected(self, spec):
        G = parse_group_spec(spec)
        for cs in coro_simple_generator(G, seed=1):
            assert cs.is_undirected
            assert check_main(G, cs).overall

    def test_f_stability_is_automatic_for_cyclic_two_groups(self):
        for spec in ["semidihedral(8)", "modular(8)"]:
            G = parse_group_spec(spec)
            assert simple_set_space(G, True) == simple_set_space(G, False)

    def test_budget_and_determinism(self):
        G = parse_group_spec("dicyclic(2x4;0,2)")
        a = [cs.mask for cs in coro_simple_generator(G, seed=5, budget=40)]
        b = [cs.mask for cs in coro_simple_generator(G, seed=5, budget=40)]
        assert a == b and len(set(a)) == 40

    def test_bipartite_double(self):
        G = parse_group_spec("semidihedral(8)")
        masks = {cs.mask for cs in coro_simple_generator(G, budget=10_000)}
        xA = sum(1 << (G.A.order + i - 1) for i in range(G.A.order))
        assert xA in masks
        assert exact_spectrum(G, split_connection_set(G, xA)).eigenvalues == [-8] + [0] * 14 + [8]
