"""Regenerate the bundled 6- and 7-vertex graph6 corpora.

The corpus files hold one graph per isomorphism class (156 classes on 6
vertices, 1044 on 7), one graph6 string per line, LF-terminated ASCII.
They are frozen as package data; this script exists so the files can be
rebuilt and audited. Requires networkx (dev-time only).
"""

import sys
from pathlib import Path

import networkx as nx


def corpus_lines(n):
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == n:
            yield nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src" / "spectral_chroma" / "data"
    for n in (6, 7):
        lines = list(corpus_lines(n))
        path = out_dir / f"graphs{n}.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"{path}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
