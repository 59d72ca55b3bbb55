"""Dual cube complexes of finite wallspaces.

A finite wallspace is a rational window with finitely many affine
walls, or (abstractly) a finite point set with two-sided partitions.
The dual complex has one 0-cube per consistent orientation: a choice
of one open side per wall such that all chosen sides pairwise meet.
Edges join orientations differing on a single wall, and higher cubes
are implicit in the flag structure (cliques of pairwise flippable
walls at a vertex).

Consistency of a pair of chosen sides is decided exactly: by rational
Fourier-Motzkin elimination on the window box for affine walls, and by
set intersection for abstract walls.  Orientations are enumerated by
breadth-first wall flipping from the base point's orientation, never
by scanning all 2^W side choices.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from cubecrys.exactlin import (
    RatVector,
    format_rational,
    parse_rational,
    vector_from_json,
    vector_to_json,
)
from cubecrys.sgnperm import SimplicialComplex
from cubecrys.walls import GeometricWall

WALL_CAP = 24
MEDIAN_VERTEX_CAP = 2 ** 14

WALLS_FORMAT = "cubecrys-walls/1"
COMPLEX_FORMAT = "cubecrys-complex/1"


class WallCapError(ValueError):
    """More walls than the enumeration cap allows."""


class WallspaceError(ValueError):
    """The wall data does not describe a valid finite wallspace."""


class MembershipError(KeyError):
    """An orientation is not a 0-cube of the complex at hand."""


class CrossingConditionError(ValueError):
    """The hypothesis of the union construction fails."""


class InternalError(RuntimeError):
    """A structural impossibility occurred; indicates a bug."""


# ---------------------------------------------------------------------------
# Exact feasibility of strict linear systems on a box


def _feasible(constraints, nvars: int) -> bool:
    """Fourier-Motzkin feasibility for constraints sum(c*x) <= / < rhs.

    Each constraint is (coeffs, rhs, strict).  Exact over Fractions;
    intended for the tiny systems arising from two halfspaces plus a
    window box.
    """
    cons = [(tuple(Fraction(c) for c in coeffs), Fraction(rhs), strict)
            for coeffs, rhs, strict in constraints]
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, rhs, strict in cons:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs, strict))
            elif c < 0:
                neg.append((coeffs, rhs, strict))
            else:
                rest.append((coeffs, rhs, strict))
        combined = rest
        for pc, pr, ps in pos:
            for nc, nr, ns in neg:
                a = pc[var]
                b = -nc[var]
                coeffs = tuple(pc[i] / a + nc[i] / b for i in range(nvars))
                combined.append((coeffs, pr / a + nr / b, ps or ns))
        cons = list(dict.fromkeys(combined))
    for _, rhs, strict in cons:
        if rhs < 0 or (strict and rhs == 0):
            return False
    return True


def _side_constraint(wall: GeometricWall, side: int):
    """The open halfspace of a wall as one strict constraint."""
    if side > 0:
        return (tuple(-e for e in wall.normal), -wall.offset, True)
    return (tuple(wall.normal), wall.offset, True)


def _window_constraints(window):
    cons = []
    for k, (lo, hi) in enumerate(window):
        n = len(window)
        unit = [Fraction(0)] * n
        unit[k] = Fraction(1)
        cons.append((tuple(unit), hi, False))
        cons.append((tuple(-e for e in unit), -lo, False))
    return cons


# ---------------------------------------------------------------------------
# Wallspaces


@dataclass(frozen=True)
class AbstractWall:
    """A two-sided partition of a finite point set."""

    minus: frozenset
    plus: frozenset

    def to_json_dict(self) -> dict:
        return {"minus": sorted(self.minus, key=repr),
                "plus": sorted(self.plus, key=repr)}


class FiniteWallspace:
    """A finite collection of walls, geometric or abstract.

    Geometric wallspaces carry a rational window box and a base point
    lying on no wall; abstract wallspaces carry an explicit point set
    and a base point.  Both expose the same pairwise side-compatibility
    interface to the dual construction.
    """

    __slots__ = ("kind", "dimension", "window", "walls", "base_point", "points")

    def __init__(self, kind, walls, base_point, dimension=None, window=None,
                 points=None):
        if len(walls) > WALL_CAP:
            raise WallCapError(
                "at most %d walls supported, got %d" % (WALL_CAP, len(walls)))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "walls", tuple(walls))
        object.__setattr__(self, "base_point", base_point)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "points", points)
        if kind == "geometric":
            self._validate_geometric()
        elif kind == "abstract":
            self._validate_abstract()
        else:
            raise WallspaceError("unknown wallspace kind %r" % (kind,))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteWallspace is immutable")

    @staticmethod
    def geometric(dimension, window, walls, base_point) -> "FiniteWallspace":
        window = tuple((Fraction(lo), Fraction(hi)) for lo, hi in window)
        return FiniteWallspace("geometric", walls, base_point,
                               dimension=dimension, window=window)

    @staticmethod
    def abstract(points, walls, base_point) -> "FiniteWallspace":
        return FiniteWallspace("abstract", walls, base_point,
                               points=tuple(points))

    def _validate_geometric(self):
        n = self.dimension
        if n is None or self.window is None or len(self.window) != n:
            raise WallspaceError("window must give one (lo, hi) pair per axis")
        for lo, hi in self.window:
            if not lo < hi:
                raise WallspaceError("degenerate window interval [%s, %s]"
                                     % (lo, hi))
        if len(set(self.walls)) != len(self.walls):
            raise WallspaceError("walls must be pairwise distinct "
                                 "after canonicalization")
        box = _window_constraints(self.window)
        for w in self.walls:
            if not isinstance(w, GeometricWall):
                raise WallspaceError("geometric wallspace needs GeometricWall "
                                     "entries")
            if len(w.normal) != n:
                raise WallspaceError("wall normal has wrong dimension")
            for side in (-1, 1):
                if not _feasible(box + [_side_constraint(w, side)], n):
                    raise WallspaceError(
                        "wall %r does not split the window" % (w,))
        p = self.base_point
        if len(p) != n:
            raise WallspaceError("base point has wrong dimension")
        for (lo, hi), x in zip(self.window, p):
            if not (lo <= x <= hi):
                raise WallspaceError("base point lies outside the window")
        for w in self.walls:
            if w.side(p) == 0:
                raise WallspaceError("base point lies on wall %r" % (w,))

    def _validate_abstract(self):
        if not self.points:
            raise WallspaceError("abstract wallspace needs a nonempty point set")
        ptset = set(self.points)
        seen = set()
        for w in self.walls:
            if not isinstance(w, AbstractWall):
                raise WallspaceError("abstract wallspace needs AbstractWall "
                                     "entries")
            if not w.minus or not w.plus:
                raise WallspaceError("a wall side is empty")
            if w.minus & w.plus:
                raise WallspaceError("wall sides overlap")
            if w.minus | w.plus != ptset:
                raise WallspaceError("wall sides do not cover the point set")
            key = frozenset((w.minus, w.plus))
            if key in seen:
                raise WallspaceError("duplicate abstract wall")
            seen.add(key)
        if self.base_point not in ptset:
            raise WallspaceError("base point is not in the point set")

    # -- side primitives ----------------------------------------------

    def base_side(self, i: int) -> int:
        """0 or 1: which side of wall i the base point lies on."""
        if self.kind == "geometric":
            return 1 if self.walls[i].side(self.base_point) > 0 else 0
        return 1 if self.base_point in self.walls[i].plus else 0

    def sides_compatible(self, i: int, si: int, j: int, sj: int) -> bool:
        """Do the chosen open sides of walls i and j meet?"""
        if i == j:
            return si == sj
        if self.kind == "geometric":
            cons = _window_constraints(self.window)
            cons.append(_side_constraint(self.walls[i], 1 if si else -1))
            cons.append(_side_constraint(self.walls[j], 1 if sj else -1))
            return _feasible(cons, self.dimension)
        a = self.walls[i].plus if si else self.walls[i].minus
        b = self.walls[j].plus if sj else self.walls[j].minus
        return bool(a & b)

    def to_json_dict(self) -> dict:
        if self.kind != "geometric":
            raise WallspaceError("only geometric wallspaces have a file form")
        return {
            "format": WALLS_FORMAT,
            "dimension": self.dimension,
            "window": [[format_rational(lo), format_rational(hi)]
                       for lo, hi in self.window],
            "walls": [w.to_json_dict() for w in self.walls],
            "base_point": vector_to_json(self.base_point),
        }


def wallspace_from_json_dict(d: dict) -> FiniteWallspace:
    if not isinstance(d, dict) or d.get("format") != WALLS_FORMAT:
        raise WallspaceError(
            "unsupported wallspace format %r (expected %r)"
            % (d.get("format") if isinstance(d, dict) else d, WALLS_FORMAT))
    try:
        walls = [GeometricWall(vector_from_json(w["normal"]),
                               parse_rational(w["offset"]))
                 for w in d["walls"]]
        return FiniteWallspace.geometric(
            dimension=d["dimension"],
            window=[(parse_rational(lo), parse_rational(hi))
                    for lo, hi in d["window"]],
            walls=walls,
            base_point=vector_from_json(d["base_point"]),
        )
    except KeyError as exc:
        raise WallspaceError("wallspace file is missing key %s" % exc) from exc
    except (ValueError, TypeError) as exc:
        if isinstance(exc, WallspaceError):
            raise
        raise WallspaceError("malformed wallspace file: %s" % exc) from exc


def save_wallspace(ws: FiniteWallspace, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(ws.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_wallspace(path) -> FiniteWallspace:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise WallspaceError("not valid JSON at line %d column %d: %s"
                                 % (exc.lineno, exc.colno, exc.msg)) from exc
    return wallspace_from_json_dict(data)


# ---------------------------------------------------------------------------
# Orientations and the dual complex


class Orientation:
    """One side choice per wall, packed as a bit vector.

    Bit i set means the plus side of wall i.  Equality and hashing are
    by value, so orientations can key dictionaries.
    """

    __slots__ = ("bits", "n")

    def __init__(self, bits: int, n: int):
        if bits < 0 or bits >> n:
            raise ValueError("orientation bits out of range for %d walls" % n)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Orientation is immutable")

    def side(self, i: int) -> int:
        return (self.bits >> i) & 1

    def flip(self, i: int) -> "Orientation":
        return Orientation(self.bits ^ (1 << i), self.n)

    def to_bitstring(self) -> str:
        return "".join("1" if self.side(i) else "0" for i in range(self.n))

    @staticmethod
    def from_bitstring(s: str) -> "Orientation":
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError("bitstring must be over {0, 1}")
        return Orientation(bits, len(s))

    def __eq__(self, other):
        return (isinstance(other, Orientation)
                and self.bits == other.bits and self.n == other.n)

    def __hash__(self):
        return hash((self.bits, self.n))

    def __repr__(self):
        return "Orientation(%s)" % self.to_bitstring()


class CubeComplex:
    """0-cubes, single-wall edges, and the implicit flag structure.

    Vertices are indexed in discovery order; edges are triples
    (u, v, wall) with u < v.  Cubes above dimension one are never
    stored: a k-cube at a vertex is a k-clique of pairwise jointly
    flippable walls, which link_of_vertex exposes.
    """

    def __init__(self, num_walls, orientations, edges, wallspace=None,
                 wall_json=None):
        orientations = tuple(orientations)
        if len({o.bits for o in orientations}) != len(orientations):
            raise ValueError("duplicate 0-cubes")
        index = {}
        for k, o in enumerate(orientations):
            if o.n != num_walls:
                raise ValueError("orientation width differs from wall count")
            index[o.bits] = k
        canon_edges = []
        adjacency = [dict() for _ in orientations]
        for u, v, wall in edges:
            bu, bv = orientations[u].bits, orientations[v].bits
            if bu ^ bv != 1 << wall:
                raise ValueError(
                    "edge (%d, %d) does not flip exactly wall %d" % (u, v, wall))
            u, v = min(u, v), max(u, v)
            canon_edges.append((u, v, wall))
            adjacency[u][wall] = v
            adjacency[v][wall] = u
        if orientations:
            seen = {0}
            stack = [0]
            while stack:
                at = stack.pop()
                for nb in adjacency[at].values():
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            if len(seen) != len(orientations):
                raise ValueError("1-skeleton is not connected")
        self.num_walls = num_walls
        self.orientations = orientations
        self.edges = tuple(sorted(set(canon_edges)))
        self.wallspace = wallspace
        self.wall_json = wall_json
        self._index = index
        self._adjacency = adjacency

    def vertex_count(self) -> int:
        return len(self.orientations)

    def edge_count(self) -> int:
        return len(self.edges)

    def index_of(self, x: Orientation) -> int:
        if x.n != self.num_walls or x.bits not in self._index:
            raise MembershipError(
                "orientation %r is not a 0-cube of this complex" % (x,))
        return self._index[x.bits]

    def contains(self, x: Orientation) -> bool:
        return x.n == self.num_walls and x.bits in self._index

    def realized_walls(self) -> list:
        return sorted({wall for _, _, wall in self.edges})

    def neighbors(self, idx: int) -> dict:
        """Map wall -> neighbor index at the given vertex."""
        return dict(self._adjacency[idx])

    def bfs_distances(self, start: int) -> list:
        dist = [-1] * len(self.orientations)
        dist[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            at = queue[head]
            head += 1
            for nb in self._adjacency[at].values():
                if dist[nb] < 0:
                    dist[nb] = dist[at] + 1
                    queue.append(nb)
        return dist

    def to_json_dict(self) -> dict:
        if self.wall_json is not None:
            walls_json = self.wall_json
        elif self.wallspace is not None and self.wallspace.kind == "geometric":
            walls_json = [w.to_json_dict() for w in self.wallspace.walls]
        else:
            walls_json = []
        return {
            "format": COMPLEX_FORMAT,
            "walls": walls_json,
            "zero_cubes": [o.to_bitstring() for o in self.orientations],
            "edges": [[u, v] for u, v, _ in self.edges],
        }


class ComplexFormatError(ValueError):
    """A complex file does not match the documented layout."""


def complex_from_json_dict(d: dict) -> CubeComplex:
    if not isinstance(d, dict) or d.get("format") != COMPLEX_FORMAT:
        raise ComplexFormatError(
            "unsupported complex format %r (expected %r)"
            % (d.get("format") if isinstance(d, dict) else d, COMPLEX_FORMAT))
    try:
        zero = list(d["zero_cubes"])
        edge_pairs = [tuple(e) for e in d["edges"]]
        walls_json = list(d.get("walls", []))
    except (KeyError, TypeError) as exc:
        raise ComplexFormatError("malformed complex file: %s" % exc) from exc
    if not zero:
        raise ComplexFormatError("a complex needs at least one 0-cube")
    width = len(zero[0])
    try:
        orientations = [Orientation.from_bitstring(s) for s in zero]
    except ValueError as exc:
        raise ComplexFormatError(str(exc)) from exc
    if any(o.n != width for o in orientations):
        raise ComplexFormatError("0-cube bitstrings differ in length")
    edges = []
    for u, v in edge_pairs:
        if not (0 <= u < len(zero) and 0 <= v < len(zero)):
            raise ComplexFormatError("edge endpoint out of range: %r" % ((u, v),))
        x = orientations[u].bits ^ orientations[v].bits
        if x == 0 or x & (x - 1):
            raise ComplexFormatError(
                "edge %r does not flip exactly one wall" % ((u, v),))
        edges.append((u, v, x.bit_length() - 1))
    try:
        return CubeComplex(width, orientations, edges, wall_json=walls_json)
    except ValueError as exc:
        raise ComplexFormatError(str(exc)) from exc


def save_complex(c: CubeComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(c.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_complex(path) -> CubeComplex:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ComplexFormatError("not valid JSON at line %d column %d: %s"
                                     % (exc.lineno, exc.colno, exc.msg)) from exc
    return complex_from_json_dict(data)


def dual_complex(ws: FiniteWallspace) -> CubeComplex:
    """All consistent orientations, found by breadth-first wall flipping.

    Starting from the orientation realized by the base point, a wall is
    flipped whenever the flipped side remains compatible with every
    other chosen side.  For finite geometric wallspaces the flip graph
    on consistent orientations is connected, so this enumerates all of
    them without touching the 2^W search space.
    """
    nwalls = len(ws.walls)
    full = (1 << nwalls) - 1

    # Pairwise compatibility tables, then per-wall bitmasks: ok[j][s][t]
    # has bit k set when (wall j, side s) tolerates (wall k, side t).
    ok = [[[0, 0], [0, 0]] for _ in range(nwalls)]
    for i in range(nwalls):
        for j in range(i + 1, nwalls):
            for si in (0, 1):
                for sj in (0, 1):
                    if ws.sides_compatible(i, si, j, sj):
                        ok[i][si][sj] |= 1 << j
                        ok[j][sj][si] |= 1 << i

    base_bits = 0
    for i in range(nwalls):
        if ws.base_side(i):
            base_bits |= 1 << i

    def flip_allowed(bits: int, j: int, new_side: int) -> bool:
        others = full & ~(1 << j)
        plus_set = bits & others
        minus_set = ~bits & others
        return (plus_set & ~ok[j][new_side][1]) == 0 and \
               (minus_set & ~ok[j][new_side][0]) == 0

    orientations = [Orientation(base_bits, nwalls)]
    index = {base_bits: 0}
    edges = []
    head = 0
    while head < len(orientations):
        at = orientations[head]
        for j in range(nwalls):
            new_side = 1 - at.side(j)
            if not flip_allowed(at.bits, j, new_side):
                continue
            nb_bits = at.bits ^ (1 << j)
            if nb_bits not in index:
                index[nb_bits] = len(orientations)
                orientations.append(Orientation(nb_bits, nwalls))
            u, v = head, index[nb_bits]
            edges.append((min(u, v), max(u, v), j))
        head += 1

    complex_ = CubeComplex(nwalls, orientations, sorted(set(edges)),
                           wallspace=ws)
    realized = set(complex_.realized_walls())
    if nwalls and realized != set(range(nwalls)):
        missing = sorted(set(range(nwalls)) - realized)
        raise InternalError(
            "walls %r produced no edge; the flip graph looks disconnected"
            % (missing,))
    return complex_


def distance(c: CubeComplex, x: Orientation, y: Orientation) -> int:
    """Number of walls on which x and y differ (= graph distance)."""
    c.index_of(x)
    c.index_of(y)
    return (x.bits ^ y.bits).bit_count()


def median(c: CubeComplex, x: Orientation, y: Orientation, z: Orientation) -> Orientation:
    """The wallwise majority vote of three 0-cubes.

    The result lies on a geodesic between each pair; for complexes
    built by dual_complex it is always a 0-cube.
    """
    for o in (x, y, z):
        c.index_of(o)
    bits = (x.bits & y.bits) | (x.bits & z.bits) | (y.bits & z.bits)
    result = Orientation(bits, c.num_walls)
    if not c.contains(result):
        raise InternalError(
            "majority vote %r is not a 0-cube; the complex is not median"
            % (result,))
    return result


def is_median_graph(c: CubeComplex) -> bool:
    """Exhaustively test the majority-vote median property.

    For every vertex triple, the wallwise majority must be a vertex
    lying on graph geodesics between each of the three pairs.  Uses
    breadth-first distances, so it does not presuppose that graph
    distance equals wall-counting distance.
    """
    count = c.vertex_count()
    if count > MEDIAN_VERTEX_CAP:
        raise WallCapError(
            "median check capped at %d vertices, got %d"
            % (MEDIAN_VERTEX_CAP, count))
    bits_list = [o.bits for o in c.orientations]
    index = c._index
    dist = [c.bfs_distances(i) for i in range(count)]
    for i in range(count):
        bi = bits_list[i]
        for j in range(i, count):
            bj = bits_list[j]
            dij = dist[i][j]
            for k in range(j, count):
                bk = bits_list[k]
                m = (bi & bj) | (bi & bk) | (bj & bk)
                at = index.get(m)
                if at is None:
                    return False
                if dist[i][at] + dist[at][j] != dij:
                    return False
                if dist[i][at] + dist[at][k] != dist[i][k]:
                    return False
                if dist[j][at] + dist[at][k] != dist[j][k]:
                    return False
    return True


def hyperplane_wallspace(c: CubeComplex) -> FiniteWallspace:
    """The abstract wallspace of the complex's own hyperplanes.

    Each realized wall splits the vertex set into its two side classes;
    the result is a valid abstract wallspace over the vertex indices,
    ready to be fed back into dual_complex.
    """
    points = tuple(range(c.vertex_count()))
    walls = []
    for wall in c.realized_walls():
        minus = frozenset(i for i, o in enumerate(c.orientations)
                          if not o.side(wall))
        plus = frozenset(i for i, o in enumerate(c.orientations)
                         if o.side(wall))
        walls.append(AbstractWall(minus=minus, plus=plus))
    return FiniteWallspace.abstract(points, walls, base_point=0)


def duality_check(c: CubeComplex) -> bool:
    """Dualizing the hyperplane wallspace must reproduce the complex.

    The canonical correspondence sends a vertex to the orientation
    choosing, for every hyperplane, the side class containing it; on
    bit vectors this is the identity (after restricting to realized
    walls), so the check compares bitmask sets and labeled edge sets
    exactly.
    """
    realized = c.realized_walls()
    rebuilt = dual_complex(hyperplane_wallspace(c))

    def project(bits: int) -> int:
        out = 0
        for new_pos, wall in enumerate(realized):
            if bits >> wall & 1:
                out |= 1 << new_pos
        return out

    original_vertices = {project(o.bits) for o in c.orientations}
    if len(original_vertices) != c.vertex_count():
        return False
    rebuilt_vertices = {o.bits for o in rebuilt.orientations}
    if original_vertices != rebuilt_vertices:
        return False
    wall_position = {wall: pos for pos, wall in enumerate(realized)}
    original_edges = set()
    for u, v, wall in c.edges:
        bu = project(c.orientations[u].bits)
        bv = project(c.orientations[v].bits)
        original_edges.add((min(bu, bv), max(bu, bv), wall_position[wall]))
    rebuilt_edges = set()
    for u, v, wall in rebuilt.edges:
        bu = rebuilt.orientations[u].bits
        bv = rebuilt.orientations[v].bits
        rebuilt_edges.add((min(bu, bv), max(bu, bv), wall))
    return original_edges == rebuilt_edges


def _walls_cross(c: CubeComplex, i: int, j: int) -> bool:
    """Two walls cross when all four side combinations occur."""
    seen = set()
    for o in c.orientations:
        seen.add((o.side(i), o.side(j)))
        if len(seen) == 4:
            return True
    return False


def union_orientation(c: CubeComplex, x: Orientation, y: Orientation,
                      z: Orientation) -> Orientation:
    """Combine two separations with crossing separators.

    Requires the walls separating x from y to be disjoint from, and to
    pairwise cross, the walls separating x from z.  The result agrees
    with y on the first set, with z on the second, and with x
    elsewhere; its separators from x are exactly the union, so
    d(x, result) = d(x, y) + d(x, z).
    """
    for o in (x, y, z):
        c.index_of(o)
    s1 = x.bits ^ y.bits
    s2 = x.bits ^ z.bits
    overlap = s1 & s2
    if overlap:
        shared = [i for i in range(c.num_walls) if overlap >> i & 1]
        raise CrossingConditionError(
            "separator sets are not disjoint; both flip walls %r" % (shared,))
    set1 = [i for i in range(c.num_walls) if s1 >> i & 1]
    set2 = [i for i in range(c.num_walls) if s2 >> i & 1]
    for i in set1:
        for j in set2:
            if not _walls_cross(c, i, j):
                raise CrossingConditionError(
                    "walls %d and %d do not cross" % (i, j))
    result = Orientation(x.bits ^ s1 ^ s2, c.num_walls)
    if not c.contains(result):
        raise InternalError(
            "union orientation %r is not a 0-cube despite crossing "
            "separators" % (result,))
    return result


def link_of_vertex(c: CubeComplex, v: Orientation) -> SimplicialComplex:
    """The flag complex of edges at a vertex.

    Link vertices are the walls flippable at v; two are adjacent when
    the corresponding square exists (the double flip is again a
    0-cube connected by the four boundary edges).
    """
    at = c.index_of(v)
    adjacent = c.neighbors(at)
    flippable = sorted(adjacent)
    edges = []
    for a in range(len(flippable)):
        for b in range(a + 1, len(flippable)):
            i, j = flippable[a], flippable[b]
            corner = v.bits ^ (1 << i) ^ (1 << j)
            if corner not in c._index:
                continue
            corner_idx = c._index[corner]
            ni, nj = adjacent[i], adjacent[j]
            if (c._adjacency[ni].get(j) == corner_idx
                    and c._adjacency[nj].get(i) == corner_idx):
                edges.append((i, j))
    return SimplicialComplex(flippable, edges)


# ---------------------------------------------------------------------------
# Seeded wallspace generation (for property sweeps and fuzzing)


def seeded_wallspaces(count: int = 50, seed: int = 0, max_walls: int = 10,
                      dimension: int = 2) -> list:
    """Deterministic pseudo-random geometric wallspaces.

    Produces `count` wallspaces with between 3 and max_walls distinct
    walls, each genuinely splitting a fixed window, with a base point
    on no wall.  Fully determined by the seed.
    """
    rng = random.Random(seed)
    window = tuple((Fraction(-6), Fraction(6)) for _ in range(dimension))
    box = _window_constraints(window)
    out = []
    while len(out) < count:
        target = rng.randrange(3, max_walls + 1)
        walls = []
        seen = set()
        attempts = 0
        while len(walls) < target and attempts < 300:
            attempts += 1
            normal = [rng.randrange(-3, 4) for _ in range(dimension)]
            if all(x == 0 for x in normal):
                continue
            offset = Fraction(rng.randrange(-9, 10), rng.choice((1, 2, 3)))
            wall = GeometricWall(RatVector(normal), offset)
            if wall in seen:
                continue
            splits = all(
                _feasible(box + [_side_constraint(wall, side)], dimension)
                for side in (-1, 1))
            if not splits:
                continue
            seen.add(wall)
            walls.append(wall)
        if len(walls) < 3:
            continue
        base = None
        for _ in range(500):
            candidate = RatVector([Fraction(rng.randrange(-550, 551), 97)
                                   for _ in range(dimension)])
            if all(w.side(candidate) != 0 for w in walls):
                base = candidate
                break
        if base is None:
            continue
        out.append(FiniteWallspace.geometric(dimension, window, walls, base))
    return out
