#!/usr/bin/env python3
"""Where do symmetrization runs end up?

Draws random pattern-free graphs, runs plain (K_r-free) and restricted
(B_{r,s}-free) symmetrization, and tabulates the final copy count of H
against the predicted extremal value.  Restricted runs need not reach a
complete multipartite graph; the table reports how often they do.
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

from genturan.counting import count_copies
from genturan.formulas import cliques_in_turan
from genturan.freeness import Book, Clique
from genturan.graph import complete_graph
from genturan.symmetrization import Mode, is_complete_multipartite, run

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from strategies import random_free_graph  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--r", type=int, default=4)
    ap.add_argument("--s", type=int, default=1)
    ap.add_argument("--k", type=int, default=2, help="count copies of K_k")
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    h = complete_graph(args.k)
    turan_value = cliques_in_turan(args.n, args.r - 1, args.k)
    plain, restricted = Counter(), Counter()
    multipartite = steps = 0
    for _ in range(args.trials):
        g = random_free_graph(rng, args.n, Clique(args.r), rng.choice([0.3, 0.6, 1.0]))
        plain[count_copies(run(g, h, Clique(args.r), Mode.PLAIN).final, h)] += 1
        g = random_free_graph(rng, args.n, Book(args.r, args.s), rng.choice([0.3, 0.6, 1.0]))
        trace = run(g, h, Book(args.r, args.s), Mode.RESTRICTED)
        restricted[count_copies(trace.final, h)] += 1
        multipartite += is_complete_multipartite(trace.final)
        steps += len(trace.steps)

    print(f"n={args.n} H=K_{args.k}; N(K_{args.k}, T(n,{args.r - 1})) = {turan_value}")
    print(f"plain, K_{args.r}-free:        {dict(sorted(plain.items()))}")
    print(f"restricted, B_{{{args.r},{args.s}}}-free: {dict(sorted(restricted.items()))}")
    print(f"restricted fixed points complete multipartite: {multipartite}/{args.trials}; "
          f"mean steps {steps / args.trials:.1f}")


if __name__ == "__main__":
    main()
