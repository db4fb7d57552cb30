"""Integer homology of the three cell structures across small diagrams:
Salvetti order complexes, Davis coset complexes, fundamental domains, plus
quotient cell counts and abelianizations."""

import argparse

from artin import complexes
from artin.diagram import CoxeterDiagram, INF, is_finite_type, parse_diagram

DEFAULT = ["A1", "A2", "B2", "I2(5)", "A3", "Atilde2",
           '{"vertices":["s","t"],"edges":[{"a":"s","b":"t","m":"inf"}]}']


def survey(name, d, ball):
    finite = is_finite_type(d)[0]
    use_ball = "all" if finite else ball
    suffix = "" if finite else f" (ball {ball})"

    p = complexes.salvetti_poset(d, ball=use_ball)
    h = complexes.homology(complexes.order_complex(p))
    print(f"  salvetti{suffix}: {len(p)} cells, {h.pretty()}")

    p = complexes.davis_poset(d, ball=use_ball)
    h = complexes.homology(complexes.order_complex(p))
    print(f"  davis{suffix}: {len(p)} cosets, {h.pretty()}")

    _, c = complexes.deligne_fundamental_domain(d)
    h = complexes.homology(c)
    print(f"  fundamental domain: {h.pretty()}")

    q = complexes.salvetti_quotient_cells(d)
    ab = complexes.abelianization(d)
    print(f"  quotient cells {q.f_vector}, euler {q.euler_characteristic}, "
          f"H_1 of the group = {ab.pretty()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("diagrams", nargs="*", default=DEFAULT,
                    help="preset names or diagram JSON")
    ap.add_argument("--ball", type=int, default=2,
                    help="truncation radius for infinite-type diagrams")
    args = ap.parse_args()

    for name in args.diagrams:
        d = parse_diagram(name)
        label = name if len(name) < 20 else "custom"
        print(f"{label}:")
        survey(label, d, args.ball)
        print()


if __name__ == "__main__":
    main()
