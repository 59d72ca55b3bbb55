"""The standard wall family of a crystallographic group.

Given any basis t_1 .. t_n of real n-space, the base walls are the
coordinate subspaces X_i = span{t_j : j != i}, with normals given by
the dual basis.  Translating each X_i by the integer span of the basis
and moving everything around by the point group produces a locally
finite wall family; the number N of parallelism classes of walls
controls which cube complex the group acts on.

Directions are handled projectively and exactly: a direction class is
the canonical primitive integer vector spanning the line (coprime
coordinates, first nonzero entry positive), so no unit-sphere
normalization and no irrational norm ever appears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from cubecrys.crys import CrystGroup, point_group_real, validate
from cubecrys.exactlin import (
    RatMatrix,
    RatVector,
    det,
    format_rational,
    inverse,
    vector_to_json,
)
from cubecrys.sgnperm import SignedPermutation, to_matrix


class RankError(ValueError):
    """The supplied vectors do not form a basis."""


class PropertyViolationError(AssertionError):
    """An exact inequality that must always hold failed on a sample."""


class InternalError(RuntimeError):
    """A structural impossibility occurred; indicates a bug."""


def canonicalize_direction(v: RatVector) -> RatVector:
    """Primitive integer representative of the line through v.

    Clears denominators, divides by the gcd, and flips sign so the
    first nonzero coordinate is positive.
    """
    if v.is_zero():
        raise ValueError("the zero vector spans no direction")
    lcm = 1
    for e in v:
        lcm = lcm * e.denominator // math.gcd(lcm, e.denominator)
    ints = [int(e * lcm) for e in v]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return RatVector(ints)


class GeometricWall:
    """An affine wall {x : <normal, x> = offset}, canonically scaled.

    The normal is stored as a primitive integer vector with positive
    leading entry and the offset is rescaled to match, so two wall
    descriptions coincide exactly when they describe the same affine
    subspace.
    """

    __slots__ = ("normal", "offset")

    def __init__(self, normal, offset):
        normal = RatVector(normal)
        offset = Fraction(offset)
        canonical = canonicalize_direction(normal)
        # The scale relating the input normal to its canonical form.
        for i, e in enumerate(canonical):
            if e != 0:
                scale = e / normal[i]
                break
        object.__setattr__(self, "normal", canonical)
        object.__setattr__(self, "offset", offset * scale)

    def __setattr__(self, name, value):
        raise AttributeError("GeometricWall is immutable")

    def side(self, point: RatVector) -> int:
        """-1, 0 or +1 according to <normal, point> - offset."""
        value = self.normal.dot(point) - self.offset
        if value < 0:
            return -1
        if value > 0:
            return 1
        return 0

    def __eq__(self, other):
        return (isinstance(other, GeometricWall)
                and self.normal == other.normal
                and self.offset == other.offset)

    def __hash__(self):
        return hash((self.normal, self.offset))

    def __repr__(self):
        return "GeometricWall(<%s, x> = %s)" % (
            ", ".join(format_rational(e) for e in self.normal),
            format_rational(self.offset))

    def to_json_dict(self) -> dict:
        return {"normal": vector_to_json(self.normal),
                "offset": format_rational(self.offset)}


@dataclass(frozen=True)
class WallFamily:
    """Base walls of a basis plus the point-group direction classes."""

    basis: tuple
    basis_matrix: RatMatrix
    dual_matrix: RatMatrix
    base_walls: tuple
    classes: tuple
    class_count: int

    def dual_coordinates(self, point: RatVector) -> RatVector:
        """Coordinates of a point in the chosen basis."""
        return self.dual_matrix * point

    def to_json_dict(self) -> dict:
        return {
            "basis": [vector_to_json(v) for v in self.basis],
            "base_walls": [w.to_json_dict() for w in self.base_walls],
            "classes": [vector_to_json(v) for v in self.classes],
            "class_count": self.class_count,
        }


def standard_walls(g: CrystGroup, basis) -> list:
    """The n base walls through the origin for the given basis.

    Wall i is the span of the other basis vectors; its normal is the
    dual covector of basis vector i, i.e. row i of the inverse basis
    matrix.
    """
    basis = [RatVector(v) for v in basis]
    n = g.dimension
    if len(basis) != n or any(len(v) != n for v in basis):
        raise RankError("need %d vectors of length %d" % (n, n))
    b = RatMatrix.from_columns(basis)
    if det(b) == 0:
        raise RankError("the supplied vectors are linearly dependent")
    b_inv = inverse(b)
    return [GeometricWall(b_inv.row(i), 0) for i in range(n)]


def direction_class_count(g: CrystGroup, basis) -> WallFamily:
    """Orbit of the basis-vector lines under the point group.

    Lines are tracked by canonical primitive integer representatives,
    which replaces the usual unit-sphere picture with an exact
    projective one.  The class count N satisfies n <= N <= n * |P|.
    """
    basis = [RatVector(v) for v in basis]
    walls = standard_walls(g, basis)
    b = RatMatrix.from_columns(basis)
    b_inv = inverse(b)
    theta = point_group_real(g)
    classes = []
    seen = set()
    queue = []
    for v in basis:
        rep = canonicalize_direction(v)
        if rep not in seen:
            seen.add(rep)
            classes.append(rep)
            queue.append(rep)
    head = 0
    while head < len(queue):
        rep = queue[head]
        head += 1
        for t in theta:
            image = canonicalize_direction(t * rep)
            if image not in seen:
                seen.add(image)
                classes.append(image)
                queue.append(image)
    n = g.dimension
    count = len(classes)
    if not (n <= count <= n * g.point_group_order()):
        raise InternalError(
            "class count %d escaped the bound %d <= N <= %d"
            % (count, n, n * g.point_group_order()))
    return WallFamily(
        basis=tuple(basis),
        basis_matrix=b,
        dual_matrix=b_inv,
        base_walls=tuple(walls),
        classes=tuple(classes),
        class_count=count,
    )


def _integers_strictly_between(a: Fraction, b: Fraction) -> int:
    if a == b:
        return 0
    lo, hi = (a, b) if a < b else (b, a)
    return max(0, math.ceil(hi) - math.floor(lo) - 1)


def separation_count(p: RatVector, q: RatVector, fam: WallFamily) -> int:
    """Number of basis-translate walls with p and q strictly on
    opposite sides.

    Per base wall i, the translates are the integer level sets of the
    i-th dual coordinate, so the count is the number of integers
    strictly between the coordinates of p and q.  Walls through p or q
    themselves separate nothing (open-halfspace convention).
    """
    nu_p = fam.dual_coordinates(p)
    nu_q = fam.dual_coordinates(q)
    return sum(_integers_strictly_between(a, b) for a, b in zip(nu_p, nu_q))


@dataclass(frozen=True)
class LinearSeparationReport:
    pairs_checked: int
    worst_ratio: Fraction
    max_basis_norm_sq: Fraction
    lower_bound_checked: bool

    def to_json_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "worst_ratio": format_rational(self.worst_ratio),
            "max_basis_norm_sq": format_rational(self.max_basis_norm_sq),
            "lower_bound_checked": self.lower_bound_checked,
        }


def check_linear_separation(g: CrystGroup, fam: WallFamily, samples) -> LinearSeparationReport:
    """Verify the wall-counting inequalities on explicit sample pairs.

    For each pair (r1, r2), with # the separation count and nu the dual
    coordinates of r1 - r2, checks exactly that

        |r1 - r2|^2 <= max_i |t_i|^2 * (# + n)^2   and
        #           >= sum_i |nu_i| - n.

    A violated pair raises PropertyViolationError; these inequalities
    are theorems, so the check doubles as a self-test of the wall
    machinery.  The worst ratio of left to right side of the first
    inequality is reported.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample pair")
    n = g.dimension
    max_norm_sq = max(v.norm_sq() for v in fam.basis)
    worst = Fraction(0)
    for r1, r2 in samples:
        sep = separation_count(r1, r2, fam)
        difference = r1 - r2
        lhs = difference.norm_sq()
        rhs = max_norm_sq * (sep + n) ** 2
        if lhs > rhs:
            raise PropertyViolationError(
                "separation bound failed for pair (%r, %r): %s > %s"
                % (r1, r2, lhs, rhs))
        nu = fam.dual_coordinates(difference)
        lower = sum(abs(e) for e in nu) - n
        if sep < lower:
            raise PropertyViolationError(
                "separation undercount for pair (%r, %r): %d < %s"
                % (r1, r2, sep, lower))
        ratio = lhs / rhs
        if ratio > worst:
            worst = ratio
    return LinearSeparationReport(
        pairs_checked=len(samples),
        worst_ratio=worst,
        max_basis_norm_sq=max_norm_sq,
        lower_bound_checked=True,
    )


def induced_action_on_RN(g: CrystGroup, fam: WallFamily) -> dict:
    """How each point element permutes the direction classes.

    The positive direction of a class is its canonical representative;
    an element's sign on a class is the sign of the rational scalar
    relating the image of the representative to the canonical
    representative of the image line.  The result is a homomorphism
    into the signed permutations on N letters.
    """
    theta = point_group_real(g)
    index = {rep: k for k, rep in enumerate(fam.classes)}
    n_classes = fam.class_count
    action = {}
    for p, t in zip(g.point_elements(), theta):
        perm = [0] * n_classes
        signs = [0] * n_classes
        for k, rep in enumerate(fam.classes):
            image = t * rep
            canonical = canonicalize_direction(image)
            j = index.get(canonical)
            if j is None:
                raise InternalError(
                    "point element did not preserve the direction classes")
            for i, e in enumerate(canonical):
                if e != 0:
                    scale = image[i] / e
                    break
            perm[k] = j + 1
            signs[k] = 1 if scale > 0 else -1
        action[p] = SignedPermutation(perm, signs)
    return action


def stabilize(g: CrystGroup, basis=None) -> CrystGroup:
    """Pass to the N-dimensional group acting on the wall classes.

    The output has lattice Z^N and point generators the induced signed
    permutation matrices; it always lies in the accepted class, with
    the identity as conjugator, because its real form already consists
    of signed permutation matrices.  N is computed from the lattice
    basis unless another basis is supplied, and the output carries
    m = N - n extra translation directions.
    """
    validate(g)
    if basis is None:
        basis = g.lattice_basis.columns()
    fam = direction_class_count(g, basis)
    action = induced_action_on_RN(g, fam)
    n_classes = fam.class_count
    new_gens = [to_matrix(action[gen]) for gen in g.point_generators]
    stabilized = CrystGroup(
        name=g.name + "-stab",
        dimension=n_classes,
        lattice_basis=RatMatrix.identity(n_classes),
        point_generators=new_gens,
        translation_parts=tuple(RatVector([0] * n_classes)
                                for _ in g.point_generators),
    )
    validate(stabilized)
    if stabilized.point_group_order() != g.point_group_order():
        raise InternalError(
            "stabilization changed the point group order from %d to %d"
            % (g.point_group_order(), stabilized.point_group_order()))
    return stabilized
