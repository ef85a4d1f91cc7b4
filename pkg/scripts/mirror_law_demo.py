#!/usr/bin/env python3
"""Generate random derivations, mirror them, and re-prove the mirrors.

Set SUBSTRUKT_SEED to pin the corpus.
"""

import argparse
import time

from substrukt.calculus import calculus, check_proof, mirror_proof
from substrukt.corpus import random_derivation, rng_from_env
from substrukt.search import Proved, prove
from substrukt.sequents import format_sequent, mirror_sequent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-sigma", type=int, default=200)
    ap.add_argument("--height", type=int, default=5)
    ap.add_argument("--sigmas", default=",e,wl,wl+wr,e+wl+wr+c",
                    help="comma list; + separates codes inside one sigma")
    args = ap.parse_args()

    rng = rng_from_env(default_seed=0)
    for spec in args.sigmas.split(","):
        sigma = spec.replace("+", ",")
        cal = calculus(sigma)
        bound = 50 if "c" in sigma else None
        t0 = time.time()
        proved = checked = 0
        example = None
        for _ in range(args.per_sigma):
            tree = random_derivation(rng, cal, height=args.height)
            mirrored = mirror_proof(tree)
            if check_proof(mirrored, cal):
                checked += 1
            goal = mirror_sequent(tree.conclusion)
            if isinstance(prove(goal, cal, bound=bound), Proved):
                proved += 1
                example = example or format_sequent(goal)
        print(f"sigma={{{sigma or ''}}}: mirrored proofs checked "
              f"{checked}/{args.per_sigma}, mirrors re-proved "
              f"{proved}/{args.per_sigma} in {time.time() - t0:.1f}s")
        if example:
            print(f"  e.g. {example}")


if __name__ == "__main__":
    main()
