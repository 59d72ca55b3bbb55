# Boundaries at infinity of products of elementary complexes.
#
# Factors: Point, HalfLine, Line, RegularTree(k).  The boundary of a
# product is the join of the factor boundaries, so a few small finite
# shapes come up again and again; a tree factor contributes an
# infinite discrete end set and keeps the answer symbolic.

from cubecrys.boundary import (
    boundary_of_Rn,
    is_isomorphic,
    parse_product,
    product_boundary,
)
from cubecrys.sgnperm import build_Qn

ZOO = [
    "Tree(3)",
    "HalfLine*HalfLine",
    "HalfLine*Line",
    "Line*Line",
    "Line*Tree(3)",
    "Tree(3)*Tree(3)",
]

for expr in ZOO:
    bd = product_boundary(parse_product(expr))
    if bd.is_finite:
        comp = bd.as_complex()
        print("%-20s -> f-vector %s" % (expr, comp.f_vector()))
    else:
        print("%-20s -> %s" % (expr, bd.describe()))

print()

# The product of n lines has the n-th hyperoctahedron as boundary:
# each line contributes an opposite pair of ends, ends of distinct
# lines are joined.
for n in range(1, 7):
    same = is_isomorphic(boundary_of_Rn(n), build_Qn(n))
    print("boundary of a product of %d lines matches Q_%d: %s"
          % (n, n, same))
