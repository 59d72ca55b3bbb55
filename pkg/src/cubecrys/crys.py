"""Crystallographic groups: data model, validation, catalog, extensions.

A group is recorded in lattice coordinates: an exact lattice basis L
(columns are the lattice generators), one integer matrix per point-group
generator describing its action on lattice coordinates, and one rational
translation part per generator.  The real, geometric form of a point
element p is theta_bar(p) = L * M_p * L^-1.

Hexagonal entries use a rational stand-in basis.  Every decision made
downstream depends only on the integer matrices and their conjugacy
data (orders, traces, determinants), never on the irrational geometry
of a true hexagon, so any fixed rational basis with the right integer
action gives the same verdicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from cubecrys.exactlin import (
    RatMatrix,
    RatVector,
    det,
    inverse,
    matrix_from_json,
    matrix_to_json,
    vector_from_json,
    vector_to_json,
)

CLOSURE_CAP = 200

GROUP_FORMAT = "cubecrys-group/1"


class BasisError(ValueError):
    """The lattice basis is singular or the wrong shape."""


class LatticeInvarianceError(ValueError):
    """A point generator does not preserve the lattice (non-integer entry)."""


class StructureError(ValueError):
    """The generator data does not define a finite point group."""


class ExtensionError(ValueError):
    """A semidirect extension violates the point-group relations."""


class CatalogError(RuntimeError):
    """Embedded catalog data failed its own validation."""


class FormatError(ValueError):
    """A group file does not parse to the documented format."""


class CrystGroup:
    """A crystallographic group in lattice coordinates.

    Immutable after construction; the point-group closure is computed
    lazily and cached, along with one generator word per element (used
    to transport homomorphisms defined on generators to the whole
    group).
    """

    def __init__(self, name, dimension, lattice_basis, point_generators,
                 translation_parts):
        self.name = str(name)
        self.dimension = int(dimension)
        self.lattice_basis = lattice_basis
        self.point_generators = tuple(point_generators)
        self.translation_parts = tuple(translation_parts)
        self._elements = None
        self._words = None
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False) and name not in ("_elements", "_words"):
            raise AttributeError("CrystGroup is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self):
        return "CrystGroup(%r, dim=%d, %d generators)" % (
            self.name, self.dimension, len(self.point_generators))

    def _closure(self):
        if self._elements is not None:
            return
        n = self.dimension
        ident = RatMatrix.identity(n)
        elements = [ident]
        words = [()]
        index = {ident: 0}
        head = 0
        while head < len(elements):
            current = elements[head]
            for j, gen in enumerate(self.point_generators):
                product = current * gen
                if product not in index:
                    if len(elements) >= CLOSURE_CAP:
                        raise StructureError(
                            "point group closure exceeded %d elements; "
                            "a generator has infinite order or the group "
                            "is out of scope" % CLOSURE_CAP)
                    index[product] = len(elements)
                    elements.append(product)
                    words.append(words[head] + (j,))
            head += 1
        self._elements = tuple(elements)
        self._words = tuple(words)

    def point_elements(self) -> tuple:
        """All point-group elements as integer matrices, identity first.

        The order is the deterministic breadth-first closure order and
        is shared by every per-element list in the package.
        """
        self._closure()
        return self._elements

    def element_words(self) -> tuple:
        """One generator word (tuple of generator indices) per element."""
        self._closure()
        return self._words

    def point_group_order(self) -> int:
        return len(self.point_elements())


@dataclass(frozen=True)
class ValidationReport:
    name: str
    dimension: int
    point_group_order: int
    element_orders: tuple
    lattice_determinant: Fraction

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "point_group_order": self.point_group_order,
            "element_orders": list(self.element_orders),
            "lattice_determinant": str(self.lattice_determinant),
        }


def validate(g: CrystGroup) -> ValidationReport:
    """Check the Bieberbach structure data and report the point group.

    Raises BasisError, LatticeInvarianceError or StructureError when the
    data does not describe a crystallographic group within scope.
    """
    n = g.dimension
    L = g.lattice_basis
    if not (L.is_square() and L.rows == n):
        raise BasisError("lattice basis must be %dx%d" % (n, n))
    d = det(L)
    if d == 0:
        raise BasisError("lattice basis is singular")
    if len(g.translation_parts) != len(g.point_generators):
        raise StructureError(
            "need one translation part per point generator (%d vs %d)"
            % (len(g.translation_parts), len(g.point_generators)))
    for k, m in enumerate(g.point_generators):
        if not (m.is_square() and m.rows == n):
            raise StructureError("point generator %d is not %dx%d" % (k, n, n))
        if not m.is_integer():
            raise LatticeInvarianceError(
                "point generator %d has a non-integer entry; "
                "it does not preserve the lattice" % k)
        if det(m) not in (1, -1):
            raise LatticeInvarianceError(
                "point generator %d has determinant %s, so its inverse "
                "does not preserve the lattice" % (k, det(m)))
    for k, t in enumerate(g.translation_parts):
        if len(t) != n:
            raise StructureError("translation part %d has length %d, want %d"
                                 % (k, len(t), n))
    elements = g.point_elements()
    orders = tuple(sorted(_element_order_in_group(m, len(elements))
                          for m in elements))
    return ValidationReport(
        name=g.name,
        dimension=n,
        point_group_order=len(elements),
        element_orders=orders,
        lattice_determinant=d,
    )


def _element_order_in_group(m: RatMatrix, group_order: int) -> int:
    ident = RatMatrix.identity(m.rows)
    power = m
    for k in range(1, group_order + 1):
        if power == ident:
            return k
        power = power * m
    raise StructureError("element order exceeds the group order; broken closure")


def point_group_real(g: CrystGroup) -> list:
    """The real forms theta_bar(p) = L M_p L^-1, in point_elements order."""
    L = g.lattice_basis
    L_inv = inverse(L)
    return [L * m * L_inv for m in g.point_elements()]


def semidirect_extend(g: CrystGroup, m: int, action, name=None) -> CrystGroup:
    """Extend by m new lattice directions with a point-group action.

    action supplies one finite-order integer m x m matrix per point
    generator of g; the extended generators are block diagonal.  The
    assignment must respect the point-group relations, which is checked
    by comparing closure sizes.
    """
    if m < 0:
        raise ExtensionError("cannot extend by a negative number of directions")
    if m == 0:
        return g
    if len(action) != len(g.point_generators):
        raise ExtensionError(
            "need one action matrix per point generator (%d vs %d)"
            % (len(action), len(g.point_generators)))
    for k, a in enumerate(action):
        if not (a.is_square() and a.rows == m):
            raise ExtensionError("action matrix %d is not %dx%d" % (k, m, m))
        if not a.is_integer():
            raise ExtensionError("action matrix %d has non-integer entries" % k)
    n = g.dimension
    new_gens = [
        RatMatrix.block_diagonal([gen, act])
        for gen, act in zip(g.point_generators, action)
    ]
    new_group = CrystGroup(
        name=name if name is not None else g.name + "-ext",
        dimension=n + m,
        lattice_basis=RatMatrix.block_diagonal(
            [g.lattice_basis, RatMatrix.identity(m)]),
        point_generators=new_gens,
        translation_parts=tuple(
            RatVector(list(t) + [0] * m) for t in g.translation_parts),
    )
    base_order = g.point_group_order()
    try:
        extended_order = new_group.point_group_order()
    except StructureError as exc:
        raise ExtensionError(
            "extension closure did not stay finite: %s" % exc) from exc
    if extended_order != base_order:
        raise ExtensionError(
            "action violates the point-group relations: extended closure "
            "has %d elements, base point group has %d"
            % (extended_order, base_order))
    return new_group


# ---------------------------------------------------------------------------
# Group files


def group_to_json_dict(g: CrystGroup) -> dict:
    return {
        "format": GROUP_FORMAT,
        "name": g.name,
        "dimension": g.dimension,
        "lattice_basis": matrix_to_json(g.lattice_basis),
        "point_generators": [matrix_to_json(m) for m in g.point_generators],
        "translation_parts": [vector_to_json(t) for t in g.translation_parts],
    }


def group_from_json_dict(d: dict) -> CrystGroup:
    if not isinstance(d, dict):
        raise FormatError("group file must be a JSON object")
    if d.get("format") != GROUP_FORMAT:
        raise FormatError(
            "unsupported format tag %r (expected %r)"
            % (d.get("format"), GROUP_FORMAT))
    try:
        return CrystGroup(
            name=d["name"],
            dimension=d["dimension"],
            lattice_basis=matrix_from_json(d["lattice_basis"]),
            point_generators=[matrix_from_json(m) for m in d["point_generators"]],
            translation_parts=[vector_from_json(t) for t in d["translation_parts"]],
        )
    except KeyError as exc:
        raise FormatError("group file is missing key %s" % exc) from exc
    except (ValueError, TypeError) as exc:
        raise FormatError("malformed group file: %s" % exc) from exc


def save_group(g: CrystGroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(group_to_json_dict(g), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_group(path) -> CrystGroup:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("not valid JSON at line %d column %d: %s"
                              % (exc.lineno, exc.colno, exc.msg)) from exc
    return group_from_json_dict(data)


# ---------------------------------------------------------------------------
# Embedded catalog
#
# The 17 wallpaper groups with conventional generator choices from the
# public crystallographic tables, plus three worked 2- and 3-dimensional
# companions: W (the hexagonal Z^2 : Z_6 given by its rotation action),
# its untwisted stabilization ZxW, and the twisted extension Z:W where
# the order-6 generator also negates the new direction.

_SQUARE = [["1", "0"], ["0", "1"]]
# Rhombic stand-in: columns (1, 1/2) and (1, -1/2).
_RHOMBIC = [["1", "1"], ["1/2", "-1/2"]]
# Hexagonal stand-in: columns (1, 0) and (-1/2, 6/7).  Any positive
# rational in place of 6/7 gives the same integer point action.
_HEXAGONAL = [["1", "-1/2"], ["0", "6/7"]]

_R2 = [["-1", "0"], ["0", "-1"]]            # half turn
_MX = [["1", "0"], ["0", "-1"]]             # mirror fixing the x-axis
_R4 = [["0", "-1"], ["1", "0"]]             # quarter turn
_R3 = [["0", "-1"], ["1", "-1"]]            # third turn, hexagonal coords
_R6 = [["1", "-1"], ["1", "0"]]             # sixth turn, hexagonal coords
_SWAP = [["0", "1"], ["1", "0"]]            # swap the two lattice directions
_NEG_SWAP = [["0", "-1"], ["-1", "0"]]
_W_GEN = [["0", "-1"], ["1", "1"]]          # sixth turn written a->b->a^-1 b

_ZERO2 = ["0", "0"]

_CATALOG_DATA = [
    ("p1", _SQUARE, [], [], 1),
    ("p2", _SQUARE, [_R2], [_ZERO2], 2),
    ("pm", _SQUARE, [_MX], [_ZERO2], 2),
    ("pg", _SQUARE, [_MX], [["1/2", "0"]], 2),
    ("cm", _RHOMBIC, [_SWAP], [_ZERO2], 2),
    ("pmm", _SQUARE, [_MX, [["-1", "0"], ["0", "1"]]], [_ZERO2, _ZERO2], 4),
    ("pmg", _SQUARE, [_R2, _MX], [_ZERO2, ["1/2", "0"]], 4),
    ("pgg", _SQUARE, [_R2, _MX], [_ZERO2, ["1/2", "1/2"]], 4),
    ("cmm", _RHOMBIC, [_SWAP, _R2], [_ZERO2, _ZERO2], 4),
    ("p4", _SQUARE, [_R4], [_ZERO2], 4),
    ("p4m", _SQUARE, [_R4, _MX], [_ZERO2, _ZERO2], 8),
    ("p4g", _SQUARE, [_R4, _MX], [_ZERO2, ["1/2", "1/2"]], 8),
    ("p3", _HEXAGONAL, [_R3], [_ZERO2], 3),
    ("p3m1", _HEXAGONAL, [_R3, _NEG_SWAP], [_ZERO2, _ZERO2], 6),
    ("p31m", _HEXAGONAL, [_R3, _SWAP], [_ZERO2, _ZERO2], 6),
    ("p6", _HEXAGONAL, [_R6], [_ZERO2], 6),
    ("p6m", _HEXAGONAL, [_R6, _SWAP], [_ZERO2, _ZERO2], 12),
    ("W", _HEXAGONAL, [_W_GEN], [_ZERO2], 6),
]

# Point-group orders stated independently of the closure computation;
# validation cross-checks the enumeration against these.
CATALOG_POINT_ORDERS = {name: order for (name, _, _, _, order) in _CATALOG_DATA}
CATALOG_POINT_ORDERS["ZxW"] = 6
CATALOG_POINT_ORDERS["Z:W"] = 6

CATALOG_NAMES = [name for (name, _, _, _, _) in _CATALOG_DATA] + ["ZxW", "Z:W"]


def _build_plane_group(name, basis, gens, parts):
    return CrystGroup(
        name=name,
        dimension=2,
        lattice_basis=matrix_from_json(basis),
        point_generators=[matrix_from_json(m) for m in gens],
        translation_parts=[vector_from_json(t) for t in parts],
    )


def load_catalog() -> list:
    """The 17 wallpaper groups plus W, ZxW and Z:W, all validated."""
    groups = []
    try:
        for name, basis, gens, parts, expected_order in _CATALOG_DATA:
            g = _build_plane_group(name, basis, gens, parts)
            report = validate(g)
            if report.point_group_order != expected_order:
                raise CatalogError(
                    "catalog entry %s has point group order %d, expected %d"
                    % (name, report.point_group_order, expected_order))
            groups.append(g)
        w = groups[-1]
        assert w.name == "W"
        one = RatMatrix([[1]])
        minus_one = RatMatrix([[-1]])
        zxw = semidirect_extend(w, 1, [one], name="ZxW")
        zsw = semidirect_extend(w, 1, [minus_one], name="Z:W")
        for g in (zxw, zsw):
            report = validate(g)
            if report.point_group_order != CATALOG_POINT_ORDERS[g.name]:
                raise CatalogError(
                    "catalog entry %s has point group order %d, expected %d"
                    % (g.name, report.point_group_order,
                       CATALOG_POINT_ORDERS[g.name]))
            groups.append(g)
    except CatalogError:
        raise
    except (ValueError, TypeError) as exc:
        raise CatalogError("embedded catalog data is corrupt: %s" % exc) from exc
    return groups


def catalog_entry(name: str) -> CrystGroup:
    """Look up one catalog group by name."""
    for g in load_catalog():
        if g.name == name:
            return g
    raise KeyError("no catalog entry named %r" % name)
