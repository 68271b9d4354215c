"""
Exact Lyapunov exponent sums and Monte Carlo estimates.

The sum of the non-negative homology exponents of a reduced origami is
an exact rational number: a combinatorial term from the zero orders plus
the orbit-average of reciprocal horizontal cylinder lengths.  For the
3-square L surface this gives 4/3 (exponents 1 and 1/3); for the genus
11 quaternionic cover it gives exactly 3, and the multiplicity structure
1 + 4*(1/3) + 4*lambda forces lambda = 1/6 on the faithful block.

The Monte Carlo estimator drives home the law-independent facts: the
8-square quaternionic cover has identically zero exponents on the
zero-holonomy part (its cocycle acts through a finite matrix group), and
every estimated spectrum is symmetric about zero.
"""

import os

from origami_lab import ekz_sum, load_origami, mc_exponents, w_exponent_from_sum

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def main():
    for name in ("l3", "dema", "ltilde"):
        o = load_origami(os.path.join(FIXTURES, name + ".txt"))
        report = ekz_sum(o)
        print("%-8s %-14s orbit %3d: %s + %s = %s" % (
            name, report.stratum, report.orbit_size,
            report.combinatorial, report.cylinder, report.total))

    lt = load_origami(os.path.join(FIXTURES, "ltilde.txt"))
    lam = w_exponent_from_sum(ekz_sum(lt))
    print("faithful-block exponent from 7/3 + 4*lambda = 3:  lambda =", lam)

    print()
    ew = load_origami(os.path.join(FIXTURES, "ew.txt"))
    est = mc_exponents(ew, subspace="H1_zero", steps=10000, trials=10, seed=7)
    print("zero-holonomy estimates for the 8-square quaternionic cover:")
    print("  ", " ".join("%+.5f" % x for x in est.estimates))

    est = mc_exponents(load_origami(os.path.join(FIXTURES, "l3.txt")),
                       subspace="full", steps=20000, trials=10, seed=7)
    print("full-homology estimates for the L surface (symmetric spectrum):")
    print("  ", " ".join("%+.5f" % x for x in est.estimates))


if __name__ == "__main__":
    main()
