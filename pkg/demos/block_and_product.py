"""Bigger blockers: palette-shifted blocks and Kronecker products."""

from antiramsey import LatinRectangle, block_blocker, find_rainbow, find_rainbow_either, kron_blocker, singer_blocker
from antiramsey.constructions import check_block_structure

# b-1 shifted copies of the Singer blocker: any b columns put two in one block.
R = block_blocker(2, 3)
print(R)
print(find_rainbow_either(R, (2, 3)))        # None

R = block_blocker(3, 4)
print(R.shape, find_rainbow_either(R, (3, 4)))

# When b-1 exceeds a, the rows added under each block can separate two
# columns, and the pigeonhole argument no longer applies.
R = block_blocker(2, 5)
print(R.shape, check_block_structure(R, 2, 3))
w = find_rainbow(R, (2, 5))
print(w, w.symbols(R))

# A' = J (x) A + t B (x) J.  A blocks 2 x 2, B is 2 x 2, so A' blocks 3 x 3.
A = singer_blocker(2)
B = LatinRectangle([[0, 1], [1, 0]])
K = kron_blocker(A, B, t=3)
print(K)
print(find_rainbow(K, (3, 3)))               # None
print(find_rainbow(K, (2, 3)))               # smaller shapes do appear
