"""Print the multiplicative constant of the digirth-dependent bound next to 2/5.

    python scripts/bound_table.py [--max-g 12] [--delta 120]
"""
import argparse
from fractions import Fraction

from dicolor import bound_report

GOLOWICH = Fraction(2, 5)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-g", type=int, default=12)
    parser.add_argument("--delta", type=int, default=120)
    args = parser.parse_args()

    print(f"{'g':>3} {'digirth>=':>9} {'coefficient':>12} {'vs 2/5':>7} {'int bound':>10} {'real bound':>11}")
    for g in range(2, args.max_g + 1):
        r = bound_report(g, args.delta)
        cmp = "<" if r.coefficient < GOLOWICH else ("=" if r.coefficient == GOLOWICH else ">")
        print(f"{g:>3} {2 * g - 1:>9} {str(r.coefficient):>12} {cmp:>7} "
              f"{r.integer_bound:>10} {float(r.real_bound):>11.2f}")


if __name__ == "__main__":
    main()
