"""Formula vs engine on a grid of bounded Veronese ideals I_{n,d,c}.

    python3 scripts/veronese_grid.py --max-mu 20 --out veronese.jsonl
"""

import argparse
import time
from dataclasses import dataclass, field

from _runner import run_both, write_jsonl

from reescond.families import bounded_veronese


@dataclass
class VeroneseGridConfig:
    n_range: tuple[int, int] = (2, 4)
    d_range: tuple[int, int] = (0, 6)
    c_range: tuple[int, int] = (0, 3)
    extra: list[tuple[int, int, int]] = field(default_factory=lambda: [(5, 2, 1), (5, 3, 1), (5, 4, 2)])
    max_mu: int | None = 20
    timeout: float | None = None
    out: str | None = None

    def instances(self):
        rng = lambda r: range(r[0], r[1] + 1)
        grid = [(n, d, c) for n in rng(self.n_range) for d in rng(self.d_range) for c in rng(self.c_range)]
        return grid + [p for p in self.extra if p not in grid]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-mu", type=int, default=20, help="skip ideals with more generators; 0 disables")
    ap.add_argument("--timeout", type=float, default=None, help="seconds per instance")
    ap.add_argument("--out", help="write one JSON record per instance")
    args = ap.parse_args(argv)
    cfg = VeroneseGridConfig(max_mu=args.max_mu or None, timeout=args.timeout, out=args.out)

    rows, t0 = [], time.perf_counter()
    for n, d, c in cfg.instances():
        mu = len(bounded_veronese((n, d, c)).gens)
        row = {"n": n, "d": d, "c": c, "mu": mu}
        if cfg.max_mu is not None and mu > cfg.max_mu:
            row["status"] = "SKIP"
        else:
            row.update(run_both(["veronese", "--n", str(n), "--d", str(d), "--c", str(c)], cfg.timeout))
        rows.append(row)
        print(f"I_{{{n},{d},{c}}}  mu={mu:<3} {row['status']:<7} {row.get('seconds', '')}", flush=True)

    counts = {s: sum(r["status"] == s for r in rows) for s in sorted({r["status"] for r in rows})}
    print(f"{len(rows)} instances in {time.perf_counter() - t0:.1f}s: {counts}")
    if cfg.out:
        write_jsonl(cfg.out, rows)
    return 0 if set(counts) <= {"EQUAL", "SKIP"} else 1


if __name__ == "__main__":
    raise SystemExit(main())
