"""Admissible partitions, exponential tangent cones, subspace arrangements."""

import random
from fractions import Fraction

import pytest

import datasets
import oracles
from jumploci.laurent import LaurentPoly
from jumploci.qlinalg import RationalSubspace, clear_denominators
from jumploci.tcone import (
    AdmissiblePartition,
    SubspaceArrangement,
    admissible_partitions_maximal,
    partition_subspace,
    tangent_cone_description,
    tangent_cone_polys,
)

F = Fraction

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
B1, B2, B3 = (0, 1, 1), (1, 0, 1), (1, 1, 0)  # e2+e3, e1+e3, e1+e2


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def test_partition_canonical_form():
    p = AdmissiblePartition.from_parts([[B3, E2], [E1, B1]])
    assert p.parts == (((0, 1, 0), (1, 1, 0)), ((0, 1, 1), (1, 0, 0)))
    assert p == AdmissiblePartition.from_parts([[E1, B1], [E2, B3]])
    assert p.to_json() == [[[0, 1, 0], [1, 1, 0]], [[0, 1, 1], [1, 0, 0]]]


def test_partition_refinement():
    fine = AdmissiblePartition.from_parts([[E1], [E2], [B1, B3]])
    coarse = AdmissiblePartition.from_parts([[E1, E2], [B1, B3]])
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    assert fine.refines(fine)
    other = AdmissiblePartition.from_parts([[E1, B2]])
    assert not fine.refines(other)  # supports differ


def test_chain_polynomial_has_three_maximal_partitions():
    f = datasets.chain_delta()
    maxi = admissible_partitions_maximal(f)
    matching_1 = AdmissiblePartition.from_parts([[E1, B1], [E2, B3], [E3, B2]])
    matching_2 = AdmissiblePartition.from_parts([[E1, B3], [E2, B2], [E3, B1]])
    matching_3 = AdmissiblePartition.from_parts([[E1, B2], [E2, B1], [E3, B3]])
    assert set(maxi) == {matching_1, matching_2, matching_3}
    lines = {partition_subspace(p, f) for p in maxi}
    assert lines == set(datasets.chain_lines())


def test_single_block_partition_of_toy_polynomial():
    toy = LaurentPoly.parse(datasets.TOY_CONE_TEXT)
    maxi = admissible_partitions_maximal(toy)
    assert len(maxi) == 1
    assert maxi[0].parts == (((0, 0), (0, 1), (1, 0)),)
    assert partition_subspace(maxi[0], toy).is_zero()


def test_no_partition_when_identity_misses_variety():
    assert admissible_partitions_maximal(LaurentPoly.parse("t1 + t2")) == []
    assert admissible_partitions_maximal(LaurentPoly.parse("3")) == []


def test_partition_enumeration_guard_rails():
    with pytest.raises(ValueError):
        admissible_partitions_maximal(LaurentPoly.zero(2))
    big = LaurentPoly.monomial((8,), -8, 1)
    for k in range(8):
        big = big + LaurentPoly.monomial((k,), 1, 1)
    with pytest.raises(ValueError, match="exceeds the enumeration limit"):
        admissible_partitions_maximal(big, max_support=8)
    assert admissible_partitions_maximal(big, max_support=9) != []


def test_partition_subspace_frozen():
    p = AdmissiblePartition.from_parts([[E2, B3], [E3, B2], [E1, B1]])
    sub = partition_subspace(p, datasets.chain_delta())
    assert sub == RationalSubspace.from_rows([(0, 1, -1)], 3)


def test_subspace_of_trivial_partition_is_full():
    f = LaurentPoly.parse("t1 - t2 + t1*t2 - 1")
    p = AdmissiblePartition.from_parts([[e] for e in f.support()])
    assert partition_subspace(p, f) == RationalSubspace.full(2)


def _one_parameter_sum(f: LaurentPoly, z):
    """Collect f(s^z1, ..., s^zn) as {exponent: coefficient} in one variable s."""
    collected = {}
    for expo, coeff in f.terms.items():
        level = sum(a * b for a, b in zip(expo, z))
        collected[level] = collected.get(level, 0) + coeff
    return {k: v for k, v in collected.items() if v != 0}


def test_cone_directions_kill_one_parameter_substitution():
    f = datasets.chain_delta()
    cone = tangent_cone_polys([f])
    for sub in cone.subspaces:
        for row in sub.basis:
            z = clear_denominators(row)
            assert _one_parameter_sum(f, z) == {}
            assert _one_parameter_sum(f, [-c for c in z]) == {}
            assert _one_parameter_sum(f, [3 * c for c in z]) == {}
    # a direction outside the cone does not
    assert _one_parameter_sum(f, (1, 1, 1)) != {}
    assert _one_parameter_sum(f, (1, 2, 3)) != {}


def test_random_polynomials_against_partition_oracle():
    rng = random.Random(51)
    for _ in range(40):
        n = rng.randint(2, 3)
        f = LaurentPoly.zero(n)
        for _ in range(rng.randint(2, 5)):
            expo = tuple(rng.randint(-1, 2) for _ in range(n))
            f = f + LaurentPoly.monomial(expo, rng.choice([-2, -1, 1, 2]), n)
        if f.is_zero():
            continue
        maxi = admissible_partitions_maximal(f)
        ours = {partition_subspace(p, f) for p in maxi}
        theirs = {
            RationalSubspace.from_rows([[F(x) for x in row] for row in rows], n)
            for rows in oracles.oracle_tangent_cone(
                {tuple(e): F(c) for e, c in f.terms.items()}, n)
        }
        assert ours == theirs


# ---------------------------------------------------------------------------
# arrangements
# ---------------------------------------------------------------------------

def line(*coords):
    return RationalSubspace.from_rows([coords], len(coords))


def test_arrangement_prunes_contained_subspaces():
    plane = RationalSubspace.from_rows([(1, 0, 0), (0, 1, 0)], 3)
    arr = SubspaceArrangement(3, [line(1, 0, 0), plane, line(0, 0, 1)])
    assert arr.subspaces == (line(0, 0, 1), plane)
    assert not arr.is_empty()


def test_arrangement_empty_versus_origin():
    empty = SubspaceArrangement.empty_arrangement(3)
    origin = SubspaceArrangement(3, [RationalSubspace.zero(3)])
    assert empty.is_empty()
    assert not origin.is_empty()
    assert empty != origin
    assert not empty.contains_vector((0, 0, 0))
    assert origin.contains_vector((0, 0, 0))
    assert not origin.contains_vector((1, 0, 0))


def test_arrangement_empty_flag_consistency():
    with pytest.raises(ValueError):
        SubspaceArrangement(2, [line(1, 0)], empty=True)
    with pytest.raises(ValueError):
        SubspaceArrangement(2, [], empty=False)
    assert SubspaceArrangement(2, [line(1, 0)], empty=False).subspaces == \
        (line(1, 0),)


def test_arrangement_union_and_intersection():
    a = SubspaceArrangement(2, [line(1, 0)])
    b = SubspaceArrangement(2, [line(0, 1)])
    both = a.union(b)
    assert both.subspaces == (line(0, 1), line(1, 0))
    met = both.intersect(SubspaceArrangement(2, [line(1, 1)]))
    assert met.subspaces == (RationalSubspace.zero(2),)
    assert a.intersect(SubspaceArrangement.empty_arrangement(2)).is_empty()
    diag = SubspaceArrangement(2, [line(1, 1)])
    assert diag.intersect(diag) == diag
    with pytest.raises(ValueError):
        a.union(SubspaceArrangement(3, [line(1, 0, 0)]))


def test_arrangement_contains_vector():
    arr = tangent_cone_polys([datasets.chain_delta()])
    assert arr.contains_vector((0, 2, -2))
    assert arr.contains_vector((F(1, 2), 0, F(-1, 2)))
    assert not arr.contains_vector((1, 1, 1))


def test_arrangement_json_round_trip():
    arr = tangent_cone_polys([datasets.chain_delta()])
    data = arr.to_json()
    assert data["ambient_dim"] == 3 and data["empty"] is False
    assert SubspaceArrangement.from_json(data) == arr
    empty = SubspaceArrangement.empty_arrangement(2)
    assert SubspaceArrangement.from_json(empty.to_json()) == empty


# ---------------------------------------------------------------------------
# tangent cones of zero sets and of descriptions
# ---------------------------------------------------------------------------

def test_chain_cone_is_three_lines():
    cone = tangent_cone_polys([datasets.chain_delta()])
    assert set(cone.subspaces) == set(datasets.chain_lines())
    # canonical arrangement order: dimension first, then basis rows
    assert [s.basis[0] for s in cone.subspaces] == [
        (0, 1, -1), (1, -1, 0), (1, 0, -1)]


def test_cone_of_coordinate_equations_is_origin():
    cone = tangent_cone_polys([LaurentPoly.parse("t1 - 1", 2),
                               LaurentPoly.parse("t2 - 1", 2)])
    assert cone.subspaces == (RationalSubspace.zero(2),)
    assert not cone.is_empty()


def test_cone_of_split_product_is_both_axes():
    f = LaurentPoly.parse("t1*t2 - t1 - t2 + 1")  # (t1 - 1)(t2 - 1)
    cone = tangent_cone_polys([f])
    assert set(cone.subspaces) == {line(1, 0), line(0, 1)}


def test_cone_empty_when_identity_not_on_variety():
    cone = tangent_cone_polys([LaurentPoly.parse("t1 + t2")])
    assert cone.is_empty()
    mixed = tangent_cone_polys([datasets.chain_delta(),
                                LaurentPoly.parse("t1 + t2 + t3", 3)])
    assert mixed.is_empty()


def test_cone_input_validation():
    with pytest.raises(ValueError):
        tangent_cone_polys([])
    with pytest.raises(ValueError, match="different tori"):
        tangent_cone_polys([LaurentPoly.parse("t1 - 1", 1),
                            LaurentPoly.parse("t2 - 1", 2)])
    with pytest.raises(ValueError):
        tangent_cone_polys([LaurentPoly.zero(2)])


def test_cone_of_intersected_zero_sets():
    # cone(t3 - 1) is the plane {z3 = 0}; only one chain line lies inside it,
    # the other two meet it in {0} and are pruned away
    g = LaurentPoly.parse("t3 - 1", 3)
    cone = tangent_cone_polys([datasets.chain_delta(), g])
    assert cone.subspaces == (line(1, -1, 0),)


def test_description_cone_keeps_directions_through_identity():
    assert tangent_cone_description(
        datasets.two_component_link_description()).subspaces == (
        RationalSubspace.zero(2),)
    assert tangent_cone_description(
        datasets.closed_omega_description()).subspaces == (
        RationalSubspace.zero(3),)
    surf = tangent_cone_description(datasets.surface_description())
    assert surf.subspaces == (
        RationalSubspace.from_rows(
            [(0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0),
             (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)], 6),)


def test_description_cone_of_empty_description():
    from jumploci.tori import VarietyDescription
    cone = tangent_cone_description(VarietyDescription.empty(4))
    assert cone.is_empty()
