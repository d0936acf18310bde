"""Blockers from projective planes, and planes back out of blockers."""

import numpy as np

from antiramsey import plane_from_blocker, singer_blocker, singer_difference_set, verify_plane_axioms
from antiramsey.latin import find_rainbow_shape

# A planar difference set mod q^2+q+1: every nonzero residue is a difference
# of exactly one ordered pair.
for q in (2, 3, 4, 5):
    D = singer_difference_set(q)
    print(f"q={q}  D={list(D.residues)} mod {D.modulus}  (cubic modulus {list(D.cubic_modulus)})")

# Shifting D across the columns gives an a x (a^2-a+1) latin rectangle.
R = singer_blocker(3)
print(R)

# Any two columns are translates D+i and D+j, which always meet.
cols = [set(c) for c in R.cells.T.tolist()]
meet = np.array([[len(x & y) for y in cols] for x in cols])
print(meet)                                  # 3 on the diagonal, 1 elsewhere
print(find_rainbow_shape(R, 3, 2))           # None: no rainbow 3 x 2
print(find_rainbow_shape(R, 2, 2))           # but two rows are not enough

# Reading the columns as lines gives the Fano plane back.
P = plane_from_blocker(R)
print(P.points, "points,", len(P.lines), "lines:", P.lines)
print(verify_plane_axioms(P))

# Larger orders go through GF(q^3) for q = 8, 9.
for a in (9, 10):
    P = plane_from_blocker(singer_blocker(a))
    print(a, P.order, bool(verify_plane_axioms(P)))
