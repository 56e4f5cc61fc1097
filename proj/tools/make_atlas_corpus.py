#!/usr/bin/env python3
"""Write every non-isomorphic graph on 1..7 vertices as graph6 lines.

The source is the Atlas of Graphs shipped with networkx, so the corpus comes
from an enumerator that is independent of this project. One file per order:

    python3 tools/make_atlas_corpus.py tests/data
"""
import sys
from pathlib import Path

import networkx as nx


def main() -> int:
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    out_dir.mkdir(parents=True, exist_ok=True)
    by_order = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        by_order.setdefault(g.number_of_nodes(), []).append(g)
    for n, graphs in sorted(by_order.items()):
        path = out_dir / f"graphs_n{n}.g6"
        with path.open("w") as fh:
            for g in graphs:
                fh.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
        print(f"{path}: {len(graphs)} graphs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
