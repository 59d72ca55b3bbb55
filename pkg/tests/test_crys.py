"""Tests for crystallographic group structure data and the catalog."""

import json
from fractions import Fraction

import pytest

from cubecrys.crys import (
    CATALOG_NAMES,
    CATALOG_POINT_ORDERS,
    BasisError,
    CrystGroup,
    ExtensionError,
    FormatError,
    LatticeInvarianceError,
    StructureError,
    catalog_entry,
    group_from_json_dict,
    group_to_json_dict,
    load_catalog,
    load_group,
    point_group_real,
    save_group,
    semidirect_extend,
    validate,
)
from cubecrys.exactlin import RatMatrix, RatVector, det, inverse


def square_group(name, gens, parts=None):
    gens = [RatMatrix(m) for m in gens]
    if parts is None:
        parts = [RatVector([0, 0]) for _ in gens]
    return CrystGroup(
        name=name,
        dimension=2,
        lattice_basis=RatMatrix.identity(2),
        point_generators=gens,
        translation_parts=parts,
    )


def test_closure_and_words():
    g = square_group("p4", [[[0, -1], [1, 0]]])
    elements = g.point_elements()
    assert len(elements) == 4
    assert elements[0].is_identity()
    assert g.point_group_order() == 4
    # Each element is the product of its word's generators.
    for m, word in zip(elements, g.element_words()):
        product = RatMatrix.identity(2)
        for j in word:
            product = product * g.point_generators[j]
        assert product == m


def test_closure_cap_rejects_infinite_order():
    shear = square_group("bad", [[[1, 1], [0, 1]]])
    with pytest.raises(StructureError):
        shear.point_elements()


def test_group_is_immutable():
    g = square_group("p2", [[[-1, 0], [0, -1]]])
    with pytest.raises(AttributeError):
        g.name = "other"


def test_validate_reports_orders():
    g = square_group("p4", [[[0, -1], [1, 0]]])
    report = validate(g)
    assert report.point_group_order == 4
    assert report.element_orders == (1, 2, 4, 4)
    assert report.lattice_determinant == 1
    assert report.to_json_dict()["element_orders"] == [1, 2, 4, 4]


def test_validate_rejects_bad_data():
    with pytest.raises(BasisError):
        validate(CrystGroup("g", 2, RatMatrix([[1, 1], [1, 1]]), [], []))
    with pytest.raises(BasisError):
        validate(CrystGroup("g", 2, RatMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                            [], []))
    with pytest.raises(StructureError):
        validate(square_group("g", [[[-1, 0], [0, -1]]], parts=[]))
    with pytest.raises(LatticeInvarianceError):
        validate(square_group("g", [[["1/2", 0], [0, 1]]]))
    with pytest.raises(LatticeInvarianceError):
        validate(square_group("g", [[[2, 0], [0, 1]]]))
    with pytest.raises(StructureError):
        validate(square_group("g", [[[0, -1], [1, 0]]],
                              parts=[RatVector([0, 0, 0])]))


def test_point_group_real_conjugates_by_the_basis():
    g = catalog_entry("cm")
    L = g.lattice_basis
    reals = point_group_real(g)
    for m, t in zip(g.point_elements(), reals):
        assert t == L * m * inverse(L)
    # The rhombic basis turns the swap into an orthogonal reflection.
    swap_real = reals[g.point_elements().index(RatMatrix([[0, 1], [1, 0]]))]
    assert swap_real == RatMatrix.diagonal([1, -1])


def test_semidirect_extend_block_structure():
    w = catalog_entry("W")
    ext = semidirect_extend(w, 1, [RatMatrix([[-1]])], name="tw")
    assert ext.dimension == 3
    assert ext.point_group_order() == w.point_group_order()
    gen = ext.point_generators[0]
    assert gen[2, 2] == -1
    assert gen[0, 2] == 0 and gen[2, 0] == 0
    assert ext.translation_parts[0] == RatVector([0, 0, 0])
    # m = 0 is a no-op.
    assert semidirect_extend(w, 0, []) is w


def test_semidirect_extend_rejects_wrong_action():
    w = catalog_entry("W")
    with pytest.raises(ExtensionError):
        semidirect_extend(w, -1, [])
    with pytest.raises(ExtensionError):
        semidirect_extend(w, 1, [])
    with pytest.raises(ExtensionError):
        semidirect_extend(w, 1, [RatMatrix([["1/2"]])])
    # Order 2 on the new direction cannot satisfy the order-6 relation
    # wordlessly: (gen, -1) has order lcm(6, 2) = 6, fine; but an
    # action violating the relations must be caught.  Use order 4.
    with pytest.raises(ExtensionError):
        semidirect_extend(catalog_entry("p2"), 2,
                          [RatMatrix([[0, -1], [1, 0]])])


def test_group_file_round_trip(tmp_path):
    g = catalog_entry("pg")
    path = tmp_path / "pg.json"
    save_group(g, path)
    back = load_group(path)
    assert back.name == g.name
    assert back.lattice_basis == g.lattice_basis
    assert back.point_generators == g.point_generators
    assert back.translation_parts == g.translation_parts
    assert group_to_json_dict(back) == group_to_json_dict(g)


def test_group_file_format_errors(tmp_path):
    with pytest.raises(FormatError):
        group_from_json_dict({"format": "something-else/9"})
    with pytest.raises(FormatError):
        group_from_json_dict(["not", "an", "object"])
    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"format": "cubecrys-group/1"}))
    with pytest.raises(FormatError):
        load_group(incomplete)
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{oops")
    with pytest.raises(FormatError) as err:
        load_group(bad_json)
    assert "line 1" in str(err.value)


def test_catalog_has_twenty_validated_entries():
    groups = load_catalog()
    assert [g.name for g in groups] == CATALOG_NAMES
    assert len(groups) == 20
    for g in groups:
        assert g.point_group_order() == CATALOG_POINT_ORDERS[g.name]


def test_catalog_point_orders():
    """The classical point-group orders of the 17 plane groups."""
    expected = {
        "p1": 1, "p2": 2, "pm": 2, "pg": 2, "cm": 2,
        "pmm": 4, "pmg": 4, "pgg": 4, "cmm": 4,
        "p4": 4, "p4m": 8, "p4g": 8,
        "p3": 3, "p3m1": 6, "p31m": 6,
        "p6": 6, "p6m": 12,
    }
    for name, order in expected.items():
        assert CATALOG_POINT_ORDERS[name] == order


def test_hexagonal_entries_have_the_right_element_orders():
    assert validate(catalog_entry("p3")).element_orders == (1, 3, 3)
    assert validate(catalog_entry("p6")).element_orders == (1, 2, 3, 3, 6, 6)
    w = catalog_entry("W")
    assert validate(w).element_orders == (1, 2, 3, 3, 6, 6)
    gen = w.point_generators[0]
    assert det(gen) == 1 and gen.trace() == 1


def test_pg_carries_a_genuine_glide():
    pg = catalog_entry("pg")
    assert pg.translation_parts[0] == RatVector([Fraction(1, 2), 0])


def test_catalog_entry_lookup():
    assert catalog_entry("p6m").point_group_order() == 12
    with pytest.raises(KeyError):
        catalog_entry("p7")


def test_zw_twisted_and_untwisted_differ():
    zxw = catalog_entry("ZxW")
    zsw = catalog_entry("Z:W")
    assert zxw.dimension == 3 and zsw.dimension == 3
    gen_plus = zxw.point_generators[0]
    gen_minus = zsw.point_generators[0]
    assert gen_plus[2, 2] == 1
    assert gen_minus[2, 2] == -1
    assert det(gen_plus) == 1
    assert det(gen_minus) == -1
    assert gen_plus.trace() == 2
    assert gen_minus.trace() == 0
