"""Sweep the preset catalog and a batch of random diagrams through the
classifier and taxonomy, tabulating which structural classes appear."""

import argparse
import random

from artin.diagram import classify_taxonomy, is_finite_type, preset
from artin.tits import bilinear_form, signature

PRESETS = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5",
    "I2(5)", "I2(6)", "I2(7)", "F4", "H3", "H4", "E6", "E7", "E8",
    "Atilde2",
]

FLAGS = ["finite_type", "fc_type", "two_dimensional", "large_type",
         "locally_reducible", "almost_spherical", "free_of_infinity"]


def random_diagram(rng, max_rank):
    from artin.diagram import INF, CoxeterDiagram

    n = rng.randint(1, max_rank)
    names = [f"s{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = rng.choice([2, 3, 4, 5, 6, INF])
            if m != 2:
                edges.append((names[i], names[j], m))
    return CoxeterDiagram(tuple(names), tuple(edges))


def describe(name, d):
    finite, labels = is_finite_type(d)
    tax = classify_taxonomy(d)
    sig = signature(bilinear_form(d))
    comp = ",".join(l.name for l in labels) if finite else "-"
    flags = "".join("x" if getattr(tax, f) else "." for f in FLAGS)
    print(f"{name:12s} rank={d.rank:2d} finite={str(finite):5s} "
          f"components={comp:14s} flags={flags} "
          f"sig=({sig.n_pos},{sig.n_neg},{sig.n_zero})")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=10,
                    help="number of random diagrams to add to the sweep")
    ap.add_argument("--max-rank", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"flag order: {' '.join(FLAGS)}")
    for name in PRESETS:
        describe(name, preset(name))
    rng = random.Random(args.seed)
    for i in range(args.random):
        describe(f"random{i}", random_diagram(rng, args.max_rank))


if __name__ == "__main__":
    main()
