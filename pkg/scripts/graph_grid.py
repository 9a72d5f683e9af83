"""Formula vs engine on every connected graph (loops allowed) with at most N vertices.

    python3 scripts/graph_grid.py --max-vertices 5 --out graphs.jsonl
"""

import argparse
import time
from dataclasses import dataclass

from _runner import run_both, write_jsonl

from reescond.families import connected_graphs


@dataclass
class GraphGridConfig:
    max_vertices: int = 5
    loops: bool = True
    timeout: float | None = None
    out: str | None = None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--no-loops", action="store_true")
    ap.add_argument("--timeout", type=float, default=None, help="seconds per graph")
    ap.add_argument("--out", help="write one JSON record per graph")
    args = ap.parse_args(argv)
    cfg = GraphGridConfig(args.max_vertices, not args.no_loops, args.timeout, args.out)

    graphs = [G for G in connected_graphs(cfg.max_vertices, loops=cfg.loops) if G.edges]
    rows, t0 = [], time.perf_counter()
    for k, G in enumerate(graphs, 1):
        text = "; ".join([f"vertices: {G.n}"] + [f"{i} {j}" for i, j in G.edges])
        row = {"vertices": G.n, "edges": [list(e) for e in G.edges]}
        row.update(run_both(["graph", "-i", text], cfg.timeout))
        rows.append(row)
        if row["status"] != "EQUAL":
            print(f"{row['status']}: {text}", flush=True)
        elif k % 50 == 0:
            print(f"{k}/{len(graphs)} done", flush=True)

    counts = {s: sum(r["status"] == s for r in rows) for s in sorted({r["status"] for r in rows})}
    print(f"{len(rows)} graphs in {time.perf_counter() - t0:.1f}s: {counts}")
    if cfg.out:
        write_jsonl(cfg.out, rows)
    return 0 if set(counts) == {"EQUAL"} else 1


if __name__ == "__main__":
    raise SystemExit(main())
