"""Vertex and edge anti-Ramsey numbers by sweeping hosts."""

from antiramsey import ar_edge, ar_edge_formula, ar_vertex, ar_vertex_formula

for b in (2, 3, 4):
    r = ar_vertex(2, b)
    print(f"AR_V(K_2,{b}) = {r.value}  formula {ar_vertex_formula(b)}  host {r.witness_host}  searches {r.searches}")

r = ar_vertex(2, 3)
for h in r.refuted_hosts:
    print(f"  K_{h.m},{h.n}: {h.reason}")

print("AR_E(K_2,2) =", ar_edge(2, 2).value, " formula", ar_edge_formula(2, 2))

# The greedy bound alone gives AR_E(K_2,3) <= 18; the sweep lands on the closed form.
for b in (3, 4):
    r = ar_edge(2, b)
    print(f"AR_E(K_2,{b}) = {r.value}  formula {ar_edge_formula(2, b)}  host {r.witness_host}  complete {r.complete}")
