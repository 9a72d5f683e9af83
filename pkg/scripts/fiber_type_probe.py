"""Empirical probe: do fiber-type monomial ideals satisfy I ⊆ C(I)?

Reports counterexamples; it never asserts.  Also tallies the Valla upper
containment C((I,u)) ⊆ (C(I),u) for a monomial u in fresh variables.

    python3 scripts/fiber_type_probe.py --count 500 --seed 1
"""

import argparse
import random
from dataclasses import dataclass

from reescond.conductor import conductor, fiber_type_containment_probe, valla_check
from reescond.monomial_ideal import MonomialIdeal, mi_is_nzd
from reescond.rees import ReesPresentation


@dataclass
class ProbeConfig:
    count: int = 300
    seed: int = 1
    max_vars: int = 4
    max_gens: int = 6
    max_deg: int = 4


def random_ideal(rng: random.Random, cfg: ProbeConfig) -> MonomialIdeal:
    while True:
        n = rng.randint(2, cfg.max_vars)
        gens = []
        for _ in range(rng.randint(2, cfg.max_gens)):
            e = [0] * n
            for _ in range(rng.randint(1, cfg.max_deg)):
                e[rng.randrange(n)] += 1
            gens.append(tuple(e))
        a = MonomialIdeal(n, gens)
        if len(a.gens) >= 2:
            return a


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    cfg = ProbeConfig(count=args.count, seed=args.seed)
    rng = random.Random(cfg.seed)

    fiber = contained = valla_tried = valla_ok = 0
    for _ in range(cfg.count):
        a = random_ideal(rng, cfg)
        P = ReesPresentation(a)
        rep = conductor(P, full=False)
        probe = fiber_type_containment_probe(P, rep)
        fiber += probe.fiber_type
        contained += probe.fiber_type and probe.contained
        if probe.violation:
            print(f"fiber type but I not in C(I): {a}   C = {rep.conductor}")
        # u in two fresh variables is a non-zerodivisor modulo I
        u = (0,) * a.nvars + (rng.randint(1, 2), rng.randint(0, 2))
        if mi_is_nzd(a.extend(a.nvars + 2), u):
            valla_tried += 1
            res = valla_check(ReesPresentation(a.extend(a.nvars + 2)), u)
            valla_ok += res.upper_ok
            if not res.upper_ok:
                print(f"upper containment fails: I = {a}, u = {u}")
    print(f"{cfg.count} ideals, {fiber} of fiber type, {contained} of those with I in C(I)")
    print(f"valla upper containment: {valla_ok}/{valla_tried}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
