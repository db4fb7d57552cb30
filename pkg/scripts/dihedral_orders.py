"""Recover the edge label of each dihedral diagram from its reflection
representation: the rotation s*t has order exactly m(s,t)."""

import argparse

from artin import coxeter
from artin.diagram import preset
from artin.tits import bilinear_form, pair_order, signature


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=12)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    print(f"{'diagram':8s} {'order(st)':>9s} {'|W|':>5s} {'|R|':>4s} signature")
    for p in range(3, args.max_p + 1):
        d = preset(f"I2({p})")
        s, t = d.vertices
        k = pair_order(d, s, t, tol=args.tol)
        layers = coxeter.enumerate_elements(d)
        order = sum(len(layer) for layer in layers)
        refl = len(coxeter.reflections(d))
        sig = signature(bilinear_form(d))
        assert k == p and order == 2 * p and refl == p
        print(f"{f'I2({p})':8s} {k:9d} {order:5d} {refl:4d} "
              f"({sig.n_pos},{sig.n_neg},{sig.n_zero})")


if __name__ == "__main__":
    main()
