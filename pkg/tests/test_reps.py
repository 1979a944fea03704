import itertools

import pytest

from mixcayley.abelian import characters
from mixcayley.census import CATALOG
from mixcayley.cyclotomic import CycloInt
from mixcayley.errors import PreconditionError, StructuralError
from mixcayley.group import parse_group_spec
from mixcayley.reps import (
    character_of,
    character_table,
    classify,
    equivalent_characters,
    inner_product,
    is_homomorphism,
    orbit_representatives,
    sqrt_of_unity,
)


@pytest.fixture(scope="module", params=CATALOG)
def G(request):
    return parse_group_spec(request.param)


def expected_count(G):
    k = G.index_AB
    return 2 * k + (G.A.order - k) // 2


class TestClassification:
    @pytest.mark.parametrize("spec,one,two", [
        ("dihedral(8)", 4, 1),
        ("dicyclic(4;2)", 4, 1),
        ("semidihedral(8)", 4, 3),
        ("dihedral(6)", 2, 1),
        ("dicyclic(2x4;0,2)", 8, 2),
    ])
    def test_dimension_counts(self, spec, one, two):
        reps = classify(parse_group_spec(spec))
        assert sum(r.dim == 1 for r in reps) == one
        assert sum(r.dim == 2 for r in reps) == two

    def test_count_formula(self, G):
        reps = classify(G)
        assert len(reps) == expected_count(G)
        assert sum(r.dim ** 2 for r in reps) == G.order
        assert len(G.conjugacy_classes()) == len(reps)

    def test_homomorphism(self, G):
        assert all(is_homomorphism(G, rep) for rep in classify(G))

    def test_one_dim_trivial_on_B(self, G):
        for rep in classify(G):
            if rep.dim == 1:
                assert all(rep.exps[G.A.index(b)] == 0 for b in G.B)

    def test_orthonormal(self, G):
        chis = [character_of(r) for r in classify(G)]
        for (i, p), (j, q) in itertools.product(enumerate(chis), repeat=2):
            assert inner_product(p, q) == (1 if i == j else 0)

    def test_regular_character(self, G):
        reps = classify(G)
        chis = [character_of(r) for r in reps]
        for g in range(G.order):
            total = sum((r.dim * chi[g] for r, chi in zip(reps, chis)), CycloInt.zero(G.m))
            assert total == (G.order if g == 0 else 0)

    def test_vanishing_sum(self, G):
        A = G.A
        for pi in characters(A):
            if pi.is_trivial_on(G.B):
                continue
            s = pi.sum_over([A.mul(G.f(a), A.inv(a)) for a in A.elements], G.m)
            assert s.is_zero()

    def test_branch_flip_permutes_lifts(self, G):
        plus, minus = classify(G, 1), classify(G, -1)
        key = lambda reps: sorted(tuple(r.exps) for r in reps if r.dim == 1)  # noqa: E731
        assert key(plus) == key(minus)
        k = G.index_AB
        assert [r.exps for r in plus[:k]] == [r.exps for r in minus[k:2 * k]]

    def test_deterministic_labels(self, G):
        assert [r.label for r in classify(G)] == list(range(expected_count(G)))


class TestCharacters:
    def test_two_dim_trace_dihedral8(self):
        G = parse_group_spec("dihedral(8)")
        R = [r for r in classify(G) if r.dim == 2][0]
        chi = character_of(R)
        assert chi[G.index((0, (1,)))] == 0
        assert chi[0] == 2
        assert all(chi[G.A.order + i] == 0 for i in range(G.A.order))

    def test_trivial_rep_norm(self):
        G = parse_group_spec("dicyclic(4;2)")
        triv = character_of(classify(G)[0])
        assert all(v == 1 for v in triv)
        assert inner_product(triv, triv) == 1

    def test_inner_product_reports_residue(self):
        one = CycloInt.integer(4, 1)
        with pytest.raises(StructuralError, match="residue"):
            inner_product([one, one, one], [one, one.times_i(), one])

    def test_character_table_shape(self):
        G = parse_group_spec("semidihedral(8)")
        classes, sizes, rows = character_table(G)
        assert sum(sizes) == G.order
        assert len(rows) == len(classes) == 7


class TestEquivalence:
    def test_orbit_mates(self):
        G = parse_group_spec("dihedral(8)")
        (pi, mate), = orbit_representatives(G)
        assert equivalent_characters(pi, mate, G.f, G.B)
        assert equivalent_characters(pi, pi, G.f)

    def test_distinct_orbits_inequivalent(self):
        G = parse_group_spec("semidihedral(8)")
        orbits = orbit_representatives(G)
        for (p, _), (q, _) in itertools.combinations(orbits, 2):
            assert not equivalent_characters(p, q, G.f, G.B)

    def test_requires_nontrivial_on_B(self):
        G = parse_group_spec("dihedral(8)")
        triv = characters(G.A)[0]
        with pytest.raises(PreconditionError):
            equivalent_characters(triv, triv, G.f, G.B)


class TestSquareRoot:
    def test_values(self):
        assert sqrt_of_unity(CycloInt.root(4, 0)) == 1
        assert sqrt_of_unity(CycloInt.root(4, 2)).coeffs == CycloInt.root(4, 1).coeffs

    @pytest.mark.parametrize("m", [3, 5, 12, 15, 16])
    def test_squares_back(self, m):
        for t in range(m):
            v = CycloInt.root(m, t)
            if t % 2 and m % 2 == 0:
                with pytest.raises(StructuralError):
                    sqrt_of_unity(v)
                continue
            r = sqrt_of_unity(v)
            assert r * r == v

    def test_not_a_root(self):
        with pytest.raises(StructuralError):
            sqrt_of_unity(CycloInt.integer(4, 2))
