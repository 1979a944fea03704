"""Integrality of mixed Cayley graphs over groups with an abelian subgroup of index 2."""

__version__ = "0.1.0"

from mixcayley.abelian import AbelianGroup, Automorphism, Character, atoms, characters
from mixcayley.census import CensusRecord, CensusSummary, enumerate_masks, run_census
from mixcayley.criteria import (CriterionTrace, check_dicyclic_directed, check_dihedral_directed,
                                check_main, check_s_minus_one, check_undirected,
                                coro_simple_generator, greek_letters)
from mixcayley.cyclotomic import CycloInt, is_rational_integer, perfect_square_integer
from mixcayley.errors import (ConvergenceError, GroupSpecError, MixCayleyError,
                              PreconditionError, RouteDisagreement, StructuralError)
from mixcayley.group import (ConnectionSet, ExtGroup, parse_group_spec, parse_set_expression,
                             split_connection_set)
from mixcayley.reps import Rep, classify
from mixcayley.spectrum import adjacency, exact_spectrum, is_integral_numeric, numeric_spectrum

__all__ = [
    "AbelianGroup", "Automorphism", "Character", "atoms", "characters",
    "CensusRecord", "CensusSummary", "enumerate_masks", "run_census",
    "CriterionTrace", "check_dicyclic_directed", "check_dihedral_directed", "check_main",
    "check_s_minus_one", "check_undirected", "coro_simple_generator", "greek_letters",
    "CycloInt", "is_rational_integer", "perfect_square_integer",
    "ConvergenceError", "GroupSpecError", "MixCayleyError", "PreconditionError",
    "RouteDisagreement", "StructuralError",
    "ConnectionSet", "ExtGroup", "parse_group_spec", "parse_set_expression",
    "split_connection_set",
    "Rep", "classify",
    "adjacency", "exact_spectrum", "is_integral_numeric", "numeric_spectrum",
]
