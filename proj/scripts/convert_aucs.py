#!/usr/bin/env python3
"""Convert the public CS-Aarhus (AUCS) multiplex data to wddt edge-list form.

The CS-Aarhus social network of a university research department is
distributed in a few closely related layouts. This script understands:

  * the four-column form  ``layer_id node_id node_id weight``
    (one file, usually named ``CS-Aarhus_multiplex.edges``) with a
    companion ``CS-Aarhus_layers.txt`` mapping layer ids to labels, and
  * the three-column form ``node node layer`` that is already close to
    the wddt format.

Output is a single self-describing edge list with ``#nodes:`` and
``#layers:`` rosters that ``wddt test``, ``wddt subsets`` and the
acceptance gate consume directly. Layers are emitted in the fixed order
lunch, facebook, coauthor, leisure, work whenever those labels are
present; otherwise in first-seen order. Self-loops are dropped and
duplicate edges collapsed (the network is undirected and unweighted for
our purposes).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

CANONICAL_LAYERS = ["lunch", "facebook", "coauthor", "leisure", "work"]


def read_layer_labels(path: Path) -> dict[str, str]:
    """Parse 'layer_id label' lines (a header line is tolerated)."""
    labels: dict[str, str] = {}
    for raw in path.read_text().splitlines():
        parts = raw.replace(",", " ").split()
        if len(parts) < 2:
            continue
        layer_id, label = parts[0], parts[1]
        if not layer_id.isdigit():
            continue  # header such as "layerID layerLabel"
        labels[layer_id] = label.lower()
    if not labels:
        raise SystemExit(f"error: no 'id label' rows found in {path}")
    return labels


def parse_edges(path: Path, labels: dict[str, str] | None):
    """Yield (node, node, layer_label) triples from either input layout."""
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        parts = line.replace(",", " ").split()
        if len(parts) == 4 and parts[0].isdigit():
            layer_id, u, v = parts[0], parts[1], parts[2]
            layer = (labels or {}).get(layer_id, layer_id)
        elif len(parts) == 3:
            u, v, layer = parts
            layer = layer.lower() if not layer.isdigit() else (
                (labels or {}).get(layer, layer))
        else:
            raise SystemExit(
                f"error: {path}:{lineno}: expected 3 or 4 fields, "
                f"got {len(parts)}: {line!r}")
        yield u, v, layer


def node_sort_key(name: str):
    return (0, int(name), "") if name.isdigit() else (1, 0, name)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--edges", required=True, type=Path,
                    help="input edge file (3- or 4-column layout)")
    ap.add_argument("--layers", type=Path, default=None,
                    help="optional 'layer_id label' file")
    ap.add_argument("--out", required=True, type=Path,
                    help="output wddt edge list")
    args = ap.parse_args()

    labels = read_layer_labels(args.layers) if args.layers else None

    seen_layers: list[str] = []
    edges: dict[str, set[tuple[str, str]]] = {}
    nodes: set[str] = set()
    dropped_loops = 0
    collapsed = 0
    for u, v, layer in parse_edges(args.edges, labels):
        if u == v:
            dropped_loops += 1
            continue
        if layer not in edges:
            edges[layer] = set()
            seen_layers.append(layer)
        key = (u, v) if node_sort_key(u) <= node_sort_key(v) else (v, u)
        if key in edges[layer]:
            collapsed += 1
            continue
        edges[layer].add(key)
        nodes.update(key)

    if not edges:
        raise SystemExit("error: no edges found")

    if set(seen_layers) == set(CANONICAL_LAYERS):
        layer_order = CANONICAL_LAYERS
    else:
        layer_order = seen_layers
        print(f"warning: unexpected layer labels {sorted(seen_layers)}; "
              "keeping first-seen order", file=sys.stderr)

    node_order = sorted(nodes, key=node_sort_key)
    lines = ["#nodes: " + " ".join(node_order),
             "#layers: " + " ".join(layer_order)]
    for layer in layer_order:
        for u, v in sorted(edges[layer], key=lambda e: (node_sort_key(e[0]),
                                                        node_sort_key(e[1]))):
            lines.append(f"{u} {v} {layer}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(lines) + "\n")

    n = len(node_order)
    print(f"wrote {args.out}: {n} nodes, {len(layer_order)} layers "
          f"({dropped_loops} self-loops dropped, {collapsed} duplicates "
          "collapsed)")
    for layer in layer_order:
        m = len(edges[layer])
        density = 2.0 * m / (n * (n - 1)) if n > 1 else 0.0
        print(f"  {layer}: {m} edges, density {density:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
