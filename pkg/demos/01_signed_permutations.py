# Signed permutations and hyperoctahedra.
#
# Usage: python3 demos/01_signed_permutations.py

from cubecrys.sgnperm import (
    SignedPermutation,
    build_Qn,
    enumerate_group,
    qn_automorphism,
)

# The group of signed n x n permutation matrices has 2^n n! elements.
for n in range(1, 5):
    group = enumerate_group(n)
    orders = sorted({s.order() for s in group})
    print("n = %d: %4d elements, element orders %s" % (n, len(group), orders))

print()

# No element of the n = 2 group has order 3 or 6; the smallest rank
# realizing order 6 is 3, and there every order-6 element reverses
# orientation.
sixes = [s for s in enumerate_group(3) if s.order() == 6]
print("order-6 elements at n = 3: %d, determinants %s"
      % (len(sixes), sorted({s.determinant() for s in sixes})))

example = sixes[0]
print("one of them: perm %s signs %s, trace %s"
      % (list(example.perm), list(example.signs), example.trace()))

print()

# The hyperoctahedron Q_n: one vertex per signed coordinate axis,
# edges between axes that differ.  Q_2 is a 4-cycle, Q_3 the
# octahedron.
for n in (1, 2, 3, 4):
    q = build_Qn(n)
    print("Q_%d: f-vector %s" % (n, q.f_vector()))

print()

# Every signed permutation acts on Q_n as a simplicial automorphism.
s = SignedPermutation((2, 3, 1), (1, -1, 1))
q3 = build_Qn(3)
act = qn_automorphism(s)
print("a 3-cycle with one sign flip maps Q_3 onto itself:",
      q3.relabel(act) == q3)
print("where the vertex (+1, axis 1) goes:", act((1, 1)))
