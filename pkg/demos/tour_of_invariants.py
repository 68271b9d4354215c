"""
A tour of the basic origami invariants.

Loads the bundled example surfaces and prints, for each: degree, genus,
stratum, reducedness, automorphism count, spin parity (when defined) and
the connected component of its stratum.  Then enumerates two SL(2,Z)
orbits and shows that the one-cylinder surface in fixtures/mbar_star.txt
lies in the orbit of the three-cylinder surface in fixtures/mstar.txt.
"""

import os

from origami_lab import (
    automorphisms,
    canonical_form,
    component,
    genus,
    is_reduced,
    load_origami,
    sl2z_orbit,
    spin_parity,
    stratum,
    veech_index,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def main():
    names = ["l3", "mstar", "mstarstar", "mbar_star", "dema", "ew", "ltilde"]
    print("%-10s %6s %5s %14s %7s %4s %5s %s" % (
        "name", "deg", "genus", "stratum", "reduced", "aut", "spin", "component"))
    for name in names:
        o = load_origami(os.path.join(FIXTURES, name + ".txt"))
        st = stratum(o)
        try:
            spin = str(spin_parity(o))
        except ValueError:
            spin = "-"  # odd zero orders carry no spin structure
        print("%-10s %6d %5d %14s %7s %4d %5s %s" % (
            name, o.degree, genus(o), st, is_reduced(o),
            len(automorphisms(o)), spin, component(o)))

    print()
    dema = load_origami(os.path.join(FIXTURES, "dema.txt"))
    print("orbit of dema has", len(sl2z_orbit(dema).nodes), "surfaces;",
          "Veech group index", veech_index(dema))

    mstar = load_origami(os.path.join(FIXTURES, "mstar.txt"))
    mbar = load_origami(os.path.join(FIXTURES, "mbar_star.txt"))
    graph = sl2z_orbit(mstar)
    target = canonical_form(mbar).origami
    print("orbit of mstar has", len(graph.nodes), "surfaces;",
          "contains mbar_star:", graph.index_of(target) is not None)


if __name__ == "__main__":
    main()
