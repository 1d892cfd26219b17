#!/usr/bin/env python3
"""Write graph6 encodings of seeded random graphs produced by networkx.

Each output line is: <graph6> TAB <n> TAB <edges as u-v separated by spaces>.
The C++ tests rebuild each graph from its edge list and compare encodings in
both directions.
"""

import argparse
import random

import networkx as nx


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    with open(args.out, "w", encoding="ascii") as out:
        for i in range(args.count):
            # Mostly small orders, with a tail past 62 to cover the 4-byte size field.
            n = rng.randint(1, 40) if i % 10 else rng.randint(63, 75)
            p = rng.random()
            g = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
            code = nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
            edges = " ".join(f"{min(u, v)}-{max(u, v)}" for u, v in sorted(g.edges()))
            out.write(f"{code}\t{n}\t{edges}\n")


if __name__ == "__main__":
    main()
