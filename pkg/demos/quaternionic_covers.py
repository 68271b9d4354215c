"""
Quaternion-group covers and the 12-dimensional faithful block.

Covering surfaces are built from an edge cocycle: a group element on the
right and top edge of every base square.  The quaternion cover of the
unit torus is the 8-square surface whose cocycle acts through a finite
group; the same recipe over the 3-square L surface produces a genus 11
surface in H(5,5,5,5) whose homology contains a 12-dimensional isotypical
block W (the (-1)-eigenspace of the central deck involution).

The block report checks two Dehn-multitwist products against their
expected characteristic polynomials on W (up to deck ambiguity) and
measures the span of their 1-eigenspaces.
"""

from origami_lab import (
    ew_origami,
    genus,
    ltilde_origami,
    quaternion_group,
    quaternionic_block_report,
    quotient_dims_check,
    stratum,
)
from origami_lab.covers import Q_MINUS_ONE, deck_transformation


def main():
    grp = quaternion_group()
    print("quaternion group:", " ".join(grp.name(g) for g in range(grp.order)))

    ew = ew_origami()
    print("torus cover: %d squares, genus %d, %s" % (ew.degree, genus(ew), stratum(ew)))
    lt = ltilde_origami()
    print("L cover:     %d squares, genus %d, %s" % (lt.degree, genus(lt), stratum(lt)))

    minus_one = deck_transformation(3, grp, Q_MINUS_ONE)
    print("quotient of the L cover by -1:", quotient_dims_check(lt, minus_one))

    print()
    report = quaternionic_block_report()
    print("dim W =", report["dim_W"])
    for target in report["targets"]:
        print("linear part %s: matched = %s" % (target["linear_part"], target["ok"]))
    print("span of the 1-eigenspaces:", report["span_dim_1_eigenspaces"])
    for note in report["diagnostics"]:
        print("diagnostic:", note)


if __name__ == "__main__":
    main()
