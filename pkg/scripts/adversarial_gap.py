#!/usr/bin/env python3
"""Connector comparison on the adversarial ladder family.

For growing rung counts d, connect the designated dominating set with the
star greedy and with the node/pair baseline.  The star connector pays
1+(d+1)*eps (the optimum); the baseline pays d*(1+eps), a gap that grows
linearly with d.
"""

import argparse

from cdsopt.generators import gen_fig1
from cdsopt.connector import greedy_connect, pairwise_connect


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--eps", type=float, default=0.01)
    parser.add_argument("--max-d", type=int, default=12)
    args = parser.parse_args()

    print(f"{'d':>4} {'star cost':>12} {'pairwise cost':>14} {'pairwise/star':>14}")
    for d in range(1, args.max_d + 1):
        inst, designated = gen_fig1(d, args.eps)
        cost = inst.graph.cost
        star = greedy_connect(inst, designated)
        pair = pairwise_connect(inst, designated)
        star_cost = sum(cost[u] for u in star.connectors)
        pair_cost = sum(cost[u] for u in pair.connectors)
        print(f"{d:>4} {star_cost:>12.4f} {pair_cost:>14.4f} {pair_cost / star_cost:>14.2f}")


if __name__ == "__main__":
    main()
