"""Exhaustive search for K_{m,n} ->_R K_{a,b}."""

import time

from antiramsey import SearchConfig, decide_arrow, verify_certificate
from antiramsey.decide import second_row_representatives

# Two rows, three columns: the cyclic rectangle blocks every 2 x 2.
d = decide_arrow(2, 3, 2, 2)
print(d.arrows, d.certificate.tolist())

# One more column and every coloring has a rainbow 2 x 2.
d = decide_arrow(2, 4, 2, 2)
print(d.arrows, d.nodes_explored)

# K_{2,6} still avoids K_{2,3}; K_{2,7} does not.
for n in (6, 7):
    d = decide_arrow(2, n, 2, 3)
    print(n, d.arrows, d.nodes_explored)
    if d.certificate is not None:
        print(d.certificate)
        print(verify_certificate(d.certificate, 2, n, 2, 3))

# Three rows make six columns enough.  Colorings may use up to 18 colors.
print(len(second_row_representatives(6)), "second-row classes for n = 6")
for cfg in (SearchConfig(), SearchConfig(column_symmetry_pruning=False), SearchConfig(workers=2)):
    t0 = time.perf_counter()
    d = decide_arrow(3, 6, 2, 3, cfg)
    print(d.arrows, d.nodes_explored, f"{time.perf_counter() - t0:.2f}s", cfg)
