"""Tests for the standard wall family and its direction classes."""

import random
from fractions import Fraction

import pytest

from cubecrys.crys import CrystGroup, catalog_entry, load_catalog, validate
from cubecrys.decide import HyperoctahedralWitness, hyperoctahedral_basis, is_hyperoctahedral
from cubecrys.exactlin import RatMatrix, RatVector
from cubecrys.sgnperm import from_matrix
from cubecrys.walls import (
    GeometricWall,
    RankError,
    canonicalize_direction,
    check_linear_separation,
    direction_class_count,
    induced_action_on_RN,
    separation_count,
    stabilize,
    standard_walls,
)


def trivial_group(n=2, name="free"):
    return CrystGroup(
        name=name,
        dimension=n,
        lattice_basis=RatMatrix.identity(n),
        point_generators=[],
        translation_parts=[],
    )


def test_canonicalize_direction():
    assert canonicalize_direction(RatVector(["-2/3", "4/3"])) == RatVector([1, -2])
    assert canonicalize_direction(RatVector([0, -5])) == RatVector([0, 1])
    assert canonicalize_direction(RatVector([4, 6])) == RatVector([2, 3])
    assert canonicalize_direction(RatVector([1, 0])) == RatVector([1, 0])
    with pytest.raises(ValueError):
        canonicalize_direction(RatVector([0, 0]))


def test_geometric_wall_is_canonically_scaled():
    # <(2, -4), x> = 3 is the same wall as <(1, -2), x> = 3/2.
    w = GeometricWall(RatVector([2, -4]), Fraction(3))
    assert w.normal == RatVector([1, -2])
    assert w.offset == Fraction(3, 2)
    assert w == GeometricWall(RatVector([-1, 2]), Fraction(-3, 2))
    assert w.side(RatVector([0, 0])) == -1
    assert w.side(RatVector([2, 0])) == 1
    assert w.side(RatVector(["3/2", 0])) == 0


def test_standard_walls_square_basis():
    g = trivial_group()
    walls = standard_walls(g, [RatVector([1, 0]), RatVector([0, 1])])
    assert walls[0] == GeometricWall(RatVector([1, 0]), 0)
    assert walls[1] == GeometricWall(RatVector([0, 1]), 0)


def test_standard_walls_one_dimension():
    g = trivial_group(n=1)
    walls = standard_walls(g, [RatVector([2])])
    assert len(walls) == 1
    assert walls[0] == GeometricWall(RatVector([1]), 0)


def test_standard_walls_are_dual_to_the_basis():
    """Wall i must contain every basis vector except the i-th."""
    g = trivial_group()
    basis = [RatVector([1, Fraction(1, 2)]), RatVector([1, Fraction(-1, 2)])]
    walls = standard_walls(g, basis)
    for i, w in enumerate(walls):
        for j, v in enumerate(basis):
            assert (w.normal.dot(v) == 0) == (i != j)


def test_standard_walls_need_a_basis():
    g = trivial_group()
    with pytest.raises(RankError):
        standard_walls(g, [RatVector([1, 0]), RatVector([2, 0])])
    with pytest.raises(RankError):
        standard_walls(g, [RatVector([1, 0])])


def test_direction_classes_trivial_group():
    fam = direction_class_count(trivial_group(), RatMatrix.identity(2).columns())
    assert fam.class_count == 2
    assert fam.classes == (RatVector([1, 0]), RatVector([0, 1]))


def test_direction_classes_p4m():
    g = catalog_entry("p4m")
    fam = direction_class_count(g, g.lattice_basis.columns())
    assert fam.class_count == 2


def test_direction_classes_hexagonal():
    """The sixth turn cycles three wall directions."""
    for name in ("p6", "W", "p3", "p6m"):
        g = catalog_entry(name)
        fam = direction_class_count(g, g.lattice_basis.columns())
        assert fam.class_count == 3, name


def test_direction_class_bounds_over_the_catalog():
    for g in load_catalog():
        fam = direction_class_count(g, g.lattice_basis.columns())
        n = g.dimension
        assert n <= fam.class_count <= n * g.point_group_order(), g.name


def test_witness_basis_gives_minimal_class_count():
    for name in ("p4", "cm", "pgg", "Z:W"):
        g = catalog_entry(name)
        witness = is_hyperoctahedral(g)
        assert isinstance(witness, HyperoctahedralWitness)
        fam = direction_class_count(g, hyperoctahedral_basis(g, witness))
        assert fam.class_count == g.dimension, name


def test_separation_count_square_lattice():
    fam = direction_class_count(trivial_group(), RatMatrix.identity(2).columns())
    p = RatVector([Fraction(1, 4), Fraction(1, 4)])
    q = RatVector([Fraction(11, 4), Fraction(7, 4)])
    # Crosses x=1, x=2 and y=1.
    assert separation_count(p, q, fam) == 3
    assert separation_count(q, p, fam) == 3
    assert separation_count(p, p, fam) == 0
    # The lower bound sum |nu_i| - n = (5/2 + 3/2) - 2 = 2.
    nu = fam.dual_coordinates(p - q)
    assert sum(abs(e) for e in nu) - 2 == 2


def test_separation_ignores_walls_through_endpoints():
    fam = direction_class_count(trivial_group(), RatMatrix.identity(2).columns())
    # q sits on the wall x = 1; that wall separates nothing.
    p = RatVector([Fraction(1, 2), Fraction(1, 2)])
    q = RatVector([1, Fraction(1, 2)])
    assert separation_count(p, q, fam) == 0
    r = RatVector([Fraction(5, 2), Fraction(1, 2)])
    assert separation_count(p, r, fam) == 2


def test_separation_vanishes_iff_no_wall_separates():
    fam = direction_class_count(trivial_group(), RatMatrix.identity(2).columns())
    inside = [RatVector([Fraction(1, 3), Fraction(2, 3)]),
              RatVector([Fraction(2, 3), Fraction(1, 5)])]
    assert separation_count(inside[0], inside[1], fam) == 0
    across = RatVector([Fraction(4, 3), Fraction(1, 5)])
    assert separation_count(inside[0], across, fam) == 1


def test_separation_triangle_inequality_on_collinear_triples():
    """For q between p and r (and on no wall), every wall separating
    p from r separates one of the half segments."""
    fam = direction_class_count(trivial_group(), RatMatrix.identity(2).columns())
    rng = random.Random(5)
    checked = 0
    while checked < 50:
        p = RatVector([Fraction(rng.randrange(-70, 71), 7) for _ in range(2)])
        r = RatVector([Fraction(rng.randrange(-70, 71), 7) for _ in range(2)])
        t = Fraction(rng.randrange(1, 9), 9)
        q = p + t * (r - p)
        if any(e.denominator == 1 for e in fam.dual_coordinates(q)):
            continue
        sep_pr = separation_count(p, r, fam)
        assert sep_pr <= separation_count(p, q, fam) + separation_count(q, r, fam)
        checked += 1


def test_linear_separation_exact_pair():
    g = trivial_group()
    fam = direction_class_count(g, RatMatrix.identity(2).columns())
    p = RatVector([Fraction(1, 4), Fraction(1, 4)])
    q = RatVector([Fraction(11, 4), Fraction(7, 4)])
    report = check_linear_separation(g, fam, [(p, q)])
    assert report.pairs_checked == 1
    # |p - q|^2 = 17/2 against max |t|^2 (3 + 2)^2 = 25.
    assert report.worst_ratio == Fraction(17, 2) / 25
    assert report.max_basis_norm_sq == 1
    assert report.lower_bound_checked


def test_linear_separation_on_catalog_groups():
    rng = random.Random(11)
    for name in ("p1", "p4", "cm", "p6", "p6m", "Z:W"):
        g = catalog_entry(name)
        fam = direction_class_count(g, g.lattice_basis.columns())
        samples = []
        for _ in range(100):
            samples.append((
                RatVector([Fraction(rng.randrange(-50, 51), rng.randrange(1, 11))
                           for _ in range(g.dimension)]),
                RatVector([Fraction(rng.randrange(-50, 51), rng.randrange(1, 11))
                           for _ in range(g.dimension)]),
            ))
        report = check_linear_separation(g, fam, samples)
        assert report.pairs_checked == 100
        assert report.worst_ratio <= 1


def test_check_linear_separation_needs_samples():
    g = trivial_group()
    fam = direction_class_count(g, RatMatrix.identity(2).columns())
    with pytest.raises(ValueError):
        check_linear_separation(g, fam, [])


def test_induced_action_p4():
    g = catalog_entry("p4")
    fam = direction_class_count(g, g.lattice_basis.columns())
    action = induced_action_on_RN(g, fam)
    rotation = action[g.point_generators[0]]
    assert rotation.perm == (2, 1)
    assert sorted(rotation.signs) == [-1, 1]
    identity = action[RatMatrix.identity(2)]
    assert identity.is_identity()


def test_induced_action_is_a_homomorphism():
    for name in ("p4m", "p6m", "Z:W"):
        g = catalog_entry(name)
        fam = direction_class_count(g, g.lattice_basis.columns())
        action = induced_action_on_RN(g, fam)
        elements = g.point_elements()
        for a in elements:
            for b in elements:
                assert action[a * b] == action[a] * action[b], name


def test_induced_action_of_the_twisted_generator():
    g = catalog_entry("Z:W")
    fam = direction_class_count(g, g.lattice_basis.columns())
    action = induced_action_on_RN(g, fam)
    image = action[g.point_generators[0]]
    # N = 4: three hexagonal wall directions plus the twisted axis.
    assert fam.class_count == 4
    assert image.order() == 6
    assert image.determinant() == 1  # det(-1 twist) * det(order-6 cycle part)


def test_stabilize_hexagonal():
    g = catalog_entry("p6")
    s = stabilize(g)
    assert s.dimension == 3
    assert s.name == "p6-stab"
    assert s.point_group_order() == 6
    assert s.lattice_basis == RatMatrix.identity(3)
    validate(s)
    witness = is_hyperoctahedral(s)
    assert isinstance(witness, HyperoctahedralWitness)


def test_stabilize_w_generator_image():
    s = stabilize(catalog_entry("W"))
    assert s.dimension == 3
    image = from_matrix(s.point_generators[0])
    assert image.order() == 6
    assert image.determinant() == -1


def test_stabilize_is_dimension_idempotent_on_accepted_groups():
    for name in ("p1", "pm", "p4m", "pgg"):
        g = catalog_entry(name)
        s = stabilize(g)
        assert s.dimension == g.dimension, name
        again = stabilize(s)
        assert again.dimension == s.dimension, name


def test_stabilize_every_rejected_catalog_group():
    for name in ("p3", "p3m1", "p31m", "p6", "p6m", "W", "ZxW"):
        g = catalog_entry(name)
        s = stabilize(g)
        fam = direction_class_count(g, g.lattice_basis.columns())
        assert s.dimension == fam.class_count, name
        witness = is_hyperoctahedral(s)
        assert isinstance(witness, HyperoctahedralWitness), name
        assert witness.conjugator == RatMatrix.identity(s.dimension), name
