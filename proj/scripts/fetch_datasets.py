#!/usr/bin/env python3
"""Materialize the optional small benchmark graphs as 0-based edge lists.

Writes into data/ (or the directory given as first argument):
  lesmis.edges    from networkx's bundled Les Miserables coappearance network
  dolphins.edges  downloaded from Newman's collection (needs network)
  football.edges  downloaded from Newman's collection (needs network)
  grass_web.edges grassland food web; no stable public mirror, see README

Datasets that cannot be produced are skipped with a note; the acceptance
suite skips absent files gracefully.
"""

import io
import sys
import urllib.request
import zipfile
from pathlib import Path

NEWMAN = "http://www-personal.umich.edu/~mejn/netdata/{}.zip"


def write_edges(path: Path, graph) -> None:
    import networkx as nx

    mapping = {name: i for i, name in enumerate(sorted(graph.nodes(), key=str))}
    lines = sorted(
        (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
        for u, v in graph.edges()
    )
    with path.open("w") as out:
        out.write(f"# nodes {graph.number_of_nodes()}\n")
        for u, v in lines:
            out.write(f"{u} {v}\n")
    print(f"wrote {path} ({graph.number_of_nodes()} nodes, {len(lines)} edges)")


def fetch_newman(name: str, out: Path) -> None:
    import networkx as nx

    data = urllib.request.urlopen(NEWMAN.format(name), timeout=30).read()
    with zipfile.ZipFile(io.BytesIO(data)) as archive:
        gml = archive.read(f"{name}.gml").decode("utf-8", errors="replace")
    graph = nx.parse_gml(io.StringIO(gml), label="id")
    write_edges(out, nx.Graph(graph))


def main() -> int:
    import networkx as nx

    data_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    lesmis = data_dir / "lesmis.edges"
    if not lesmis.exists():
        write_edges(lesmis, nx.Graph(nx.les_miserables_graph()))

    for name in ("dolphins", "football"):
        out = data_dir / f"{name}.edges"
        if out.exists():
            continue
        try:
            fetch_newman(name, out)
        except Exception as exc:  # offline or mirror gone
            print(f"skipping {name}: {exc}")

    if not (data_dir / "grass_web.edges").exists():
        print("grass_web.edges not present; place a whitespace edge list there manually")
    return 0


if __name__ == "__main__":
    sys.exit(main())
