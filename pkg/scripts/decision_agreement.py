#!/usr/bin/env python3
"""Compare prover verdicts with bounded countermodel search on a random
sequent corpus, in the decidable left-weakening regime and outside it.

Set SUBSTRUKT_SEED to pin the corpus.
"""

import argparse
import time

from substrukt.algebra import VarietyId
from substrukt.bridge import Found, countermodel
from substrukt.calculus import calculus, parse_sigma
from substrukt.corpus import random_sequent, rng_from_env
from substrukt.search import Proved, Refuted, prove
from substrukt.syntax import Language


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", type=int, default=100)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--sigma", default="wl")
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()

    rng = rng_from_env(default_seed=0)
    lang = Language.preset("core")
    sigma = parse_sigma(args.sigma)
    cal = calculus(sigma, lang)
    variety = VarietyId("Msl", sigma)
    regime = "FEP (genuine decision)" if "wl" in sigma else "bounded"
    tally = {"proved+nomodel": 0, "refuted+model": 0,
             "refuted+nomodel": 0, "proved+model": 0, "unknown": 0}
    t0 = time.time()
    for _ in range(args.corpus):
        s = random_sequent(rng, depth=args.depth, lang=lang)
        verdict = prove(s, cal)
        witness = countermodel(s, variety, args.max_size)
        if isinstance(verdict, Proved):
            key = "proved+model" if isinstance(witness, Found) \
                else "proved+nomodel"
        elif isinstance(verdict, Refuted):
            key = "refuted+model" if isinstance(witness, Found) \
                else "refuted+nomodel"
        else:
            key = "unknown"
        tally[key] += 1
    matched = tally["proved+nomodel"] + tally["refuted+model"]
    print(f"sigma={{{args.sigma}}} regime: {regime}")
    for key, count in tally.items():
        print(f"  {key:16} {count}")
    print(f"matched verdicts: {matched}/{args.corpus} "
          f"(soundness violations: {tally['proved+model']}) "
          f"in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
