"""Shared plumbing: run one `reescond ... --mode both --json` call and classify it."""

import json
import subprocess
import sys
import time

VERDICT = {0: "EQUAL", 1: "DIFFER", 3: "CAP"}


def run_both(argv: list[str], timeout: float | None) -> dict:
    cmd = [sys.executable, "-m", "reescond", *argv, "--mode", "both", "--json"]
    t0 = time.perf_counter()
    try:
        res = subprocess.run(cmd, capture_output=True, text=True, timeout=timeout)
    except subprocess.TimeoutExpired:
        return {"status": "TIMEOUT", "seconds": round(time.perf_counter() - t0, 2)}
    out = {"status": VERDICT.get(res.returncode, "ERROR"), "seconds": round(time.perf_counter() - t0, 2)}
    if res.stdout.strip():
        rec = json.loads(res.stdout)
        out.update(formula=rec.get("formula"), engine=rec.get("engine"))
    if res.returncode not in VERDICT:
        out["stderr"] = res.stderr.strip()
    return out


def write_jsonl(path, rows) -> None:
    with open(path, "w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
