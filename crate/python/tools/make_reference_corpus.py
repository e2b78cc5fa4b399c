"""Build the reference corpus of connected simple graphs of order 1..8.

Orders 1..7 come straight from the networkx graph atlas. Order 8 is grown
from the order-7 atlas graphs by attaching one new vertex to every nonempty
neighbor subset and rejecting isomorphs with VF2, bucketed by the
Weisfeiler-Lehman hash. Graphs are written with networkx's own graph6
writer, one per line, no header.

    python3 python/tools/make_reference_corpus.py crates/core/tests/data
"""

import hashlib
import itertools
import sys
from pathlib import Path

import networkx as nx


def atlas_connected(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def grow(base):
    buckets = {}
    out = []
    for g in base:
        n = g.number_of_nodes()
        for r in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), r):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, v) for v in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    by_order = {n: atlas_connected(n) for n in range(1, 8)}
    by_order[8] = grow(by_order[7])
    manifest = []
    for n, graphs in sorted(by_order.items()):
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
        data = ("\n".join(lines) + "\n").encode()
        name = f"connected-simple-{n}.g6"
        (outdir / name).write_bytes(data)
        manifest.append(f"{hashlib.sha256(data).hexdigest()}  {len(lines)}  {name}")
        print(n, len(lines))
    (outdir / "SHA256SUMS").write_text("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data")
