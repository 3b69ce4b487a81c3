"""Random graphs encoded by networkx: graph6<TAB>n<TAB>u-v,u-v,... (sorted)."""
import random

import networkx as nx

rng = random.Random(20240607)
for i in range(400):
    n = rng.randint(0, 62)
    p = rng.choice([0.0, 0.05, 0.2, 0.5, 0.8, 1.0])
    g = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
    code = nx.to_graph6_bytes(g, header=False).decode().strip()
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    print(f"{code}\t{n}\t" + ",".join(f"{u}-{v}" for u, v in edges))
