"""Walk through the Garside machinery on a chosen diagram: the fundamental
element, its divisor lattice, block normal forms of sample words, and the
axiom report."""

import argparse
import itertools

from artin import group, monoid
from artin.diagram import is_finite_type, parse_diagram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--diagram", default="B2",
                    help="preset name or diagram JSON")
    ap.add_argument("--length-cap", type=int, default=4)
    ap.add_argument("--samples", type=int, default=8)
    args = ap.parse_args()

    d = parse_diagram(args.diagram)
    finite = is_finite_type(d)[0]

    if finite:
        delta = monoid.garside_element(d, d.vertices)
        print(f"Delta = {''.join(delta.word)}  (length {delta.length})")
        left = monoid.divisor_set(d, delta, "left")
        right = monoid.divisor_set(d, delta, "right")
        print(f"divisors: {len(left)} left, {len(right)} right, "
              f"symmetric={left == right}")
        sigma = monoid.garside_permutation(d)
        print(f"sigma: {sigma}")
        dl = group.delta_element(d)
        for s in d.vertices:
            conj = group.multiply(group.multiply(dl, group.from_letters(d, s)),
                                  group.invert(dl))
            assert group.equal(conj, group.from_letters(d, sigma[s]))
        print("Delta-conjugation matches sigma on every generator")

    print(f"\nsample normal forms (words of length {args.samples // 2}):")
    words = itertools.islice(
        itertools.product(d.vertices, repeat=max(2, args.samples // 2)),
        args.samples,
    )
    for w in words:
        nf = monoid.garside_normal_form(d, w)
        blocks = " | ".join("".join(T) for T in nf.blocks) or "e"
        print(f"  {''.join(w):10s} -> {blocks}")

    print(f"\naxioms at length cap {args.length_cap}:")
    rep = monoid.verify_garside_axioms(d, length_cap=args.length_cap)
    print(f"  cancellative={rep.cancellative} additive={rep.length_additive} "
          f"gcd={rep.gcd_ok} lcm={rep.lcm_ok} passed={rep.passed}")
    if rep.lcm_failures:
        a, b = rep.lcm_failures[0]
        print(f"  first lcm failure: ({''.join(a)}, {''.join(b)})")
    if rep.divisor_count is not None:
        print(f"  divisor count {rep.divisor_count} vs group order "
              f"{rep.group_order}")


if __name__ == "__main__":
    main()
