"""Lights Out on a graph: every vertex carries a lamp, and pressing a vertex
toggles its own lamp together with every neighbouring lamp.  A graph is
*universally solvable* when every starting pattern can be switched off.

This demo builds a few small graphs, shows their neighborhood matrices over
GF(2), and solves concrete starting configurations.
"""

from lightsout import (Configuration, Graph, is_universally_solvable,
                       neighborhood_matrix, solve_configuration)


def show(graph, label):
    m = neighborhood_matrix(graph)
    print(f"{label} (n={graph.n}, {graph.edge_count} edges)")
    for i in range(graph.n):
        print("   ", " ".join(str(m.entry(i, j)) for j in range(graph.n)))
    verdict = "universally solvable" if is_universally_solvable(graph) else \
        "NOT universally solvable"
    print(f"    -> {verdict}\n")


path4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
cycle4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
star4 = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])

show(path4, "Path P4")
show(cycle4, "Cycle C4")
show(star4, "Star K_{1,3}")

print("Solving 'all lamps on' on each graph:")
for graph, label in [(path4, "P4"), (cycle4, "C4"), (star4, "star")]:
    config = Configuration(graph.n, frozenset(range(1, graph.n + 1)))
    press = solve_configuration(graph, config)
    if press is None:
        print(f"    {label}: no press set turns everything off")
    else:
        print(f"    {label}: press vertices {sorted(press)}")

# Sanity-check one answer by simulating the presses.
press = solve_configuration(path4, Configuration(4, frozenset({1, 2, 3, 4})))
lamps = {1, 2, 3, 4}
for v in sorted(press):
    closed = {v} | {b if a == v else a for a, b in path4.edges if v in (a, b)}
    lamps ^= closed
print(f"\nSimulated presses on P4 leave lamps: {sorted(lamps) or 'none (all off)'}")
