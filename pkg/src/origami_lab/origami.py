r"""
The Origami type: a pair (h, v) of same-degree permutations with
transitive action, encoding a translation surface tiled by unit squares.
h(i) is the square to the right of square i, v(i) the square on top of it,
and two origamis are isomorphic iff the pairs are simultaneously conjugate.

Provides singularity data (corner permutation, stratum, genus), the
reduction test, deck transformations, and a canonical labeling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Optional

from .perm import (
    Permutation,
    compose,
    conjugate,
    identity,
    is_transitive,
    parse_cycles,
    render_cycles,
)


class Origami:
    """Immutable validated pair (h, v); squares are the symbols 1..N."""

    __slots__ = ("h", "v", "label")

    def __init__(self, h, v, label=None):
        if h.degree != v.degree:
            raise ValueError(
                "h and v have different degrees: %d vs %d" % (h.degree, v.degree)
            )
        if not is_transitive([h, v]):
            raise ValueError("the pair (h, v) is not transitive: surface disconnected")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("Origami is immutable")

    @property
    def degree(self):
        return self.h.degree

    def __eq__(self, other):
        # the label is metadata, not part of the value
        return (
            isinstance(other, Origami)
            and self.h == other.h
            and self.v == other.v
        )

    def __hash__(self):
        return hash((self.h.images, self.v.images))

    def __repr__(self):
        name = " %r" % self.label if self.label else ""
        return "Origami(h=%s, v=%s%s)" % (self.h, self.v, name)

    def relabel(self, r):
        """Simultaneous conjugation: squares renamed by i -> r(i)."""
        return Origami(conjugate(self.h, r), conjugate(self.v, r), self.label)

    def canonical(self):
        return canonical_form(self).origami

    def to_json(self):
        return {
            "degree": self.degree,
            "h_images": list(self.h.images),
            "v_images": list(self.v.images),
            "label": self.label,
        }

    @staticmethod
    def from_json(obj):
        return Origami(
            Permutation(obj["h_images"]),
            Permutation(obj["v_images"]),
            obj.get("label"),
        )


def new_origami(h, v, label=None):
    return Origami(h, v, label)


@dataclass(frozen=True)
class Stratum:
    """Zero orders (sorted descending) and the genus; sum k = 2g - 2."""

    orders: tuple
    genus: int

    def __post_init__(self):
        orders = tuple(sorted((int(k) for k in self.orders), reverse=True))
        object.__setattr__(self, "orders", orders)
        if orders:
            if sum(orders) != 2 * self.genus - 2:
                raise ValueError(
                    "orders %r do not sum to 2g-2 for g=%d" % (orders, self.genus)
                )
        elif self.genus != 1:
            raise ValueError("empty order list requires genus 1")

    def __str__(self):
        if not self.orders:
            return "H()"
        return "H(%s)" % ",".join(str(k) for k in self.orders)


def corner_permutation(o):
    """The permutation c = v h v^-1 h^-1 on squares, squares standing for
    their bottom-left corners.

    c(i) is the next square counterclockwise around the bottom-left corner
    of square i whose own bottom-left corner is that same point, so cycles
    of c are exactly the vertices of the square complex; a cycle of length
    l is a cone point of angle 2*pi*l.  (The commutator in the other
    grouping has the same cycle type but partitions the squares by a
    different corner, which breaks the incidence maps of the chain
    complex.)
    """
    hi = o.h.inverse()
    vi = o.v.inverse()
    return compose(o.v, compose(o.h, compose(vi, hi)))


def singularities(o):
    """Multiset {l - 1 : l >= 2 cycle length of the corner permutation}."""
    c = corner_permutation(o)
    return tuple(
        sorted(
            (len(cyc) - 1 for cyc in c.cycles(include_fixed=True) if len(cyc) > 1),
            reverse=True,
        )
    )


def genus(o):
    c = corner_permutation(o)
    n_vertices = len(c.cycles(include_fixed=True))
    two_g_minus_2 = o.degree - n_vertices
    if two_g_minus_2 % 2 != 0:
        raise AssertionError("N - V must be even")
    g = 1 + two_g_minus_2 // 2
    if sum(singularities(o)) != 2 * g - 2:
        raise AssertionError("cone-angle and Euler-characteristic genus disagree")
    return g


def stratum(o):
    return Stratum(singularities(o), genus(o))


def square_positions(o):
    """Integer plane positions of the squares from a breadth-first
    development (square 1 at the origin, h a step right, v a step up),
    together with the list of holonomy vectors of the loops closing the
    development."""
    n = o.degree
    pos = [None] * (n + 1)
    pos[1] = (0, 0)
    queue = [1]
    loops = []
    hi, vi = o.h.inverse(), o.v.inverse()
    while queue:
        nxt = []
        for s in queue:
            x, y = pos[s]
            for t, tx, ty in (
                (o.h(s), x + 1, y),
                (o.v(s), x, y + 1),
                (hi(s), x - 1, y),
                (vi(s), x, y - 1),
            ):
                if pos[t] is None:
                    pos[t] = (tx, ty)
                    nxt.append(t)
                else:
                    dx, dy = tx - pos[t][0], ty - pos[t][1]
                    if (dx, dy) != (0, 0):
                        loops.append((dx, dy))
        queue = nxt
    return pos[1:], loops


def is_reduced(o):
    """True iff the relative periods of the origami generate the full
    integer lattice (the surface is not a pull-back through a larger
    torus).

    The relative period lattice is generated by the holonomy vectors of
    closed loops plus the differences of positions of squares whose
    bottom-left corner is a singular point.
    """
    pos, vectors = square_positions(o)
    vectors = list(vectors)
    c = corner_permutation(o)
    singular_squares = [
        s
        for cyc in c.cycles(include_fixed=True)
        if len(cyc) > 1
        for s in cyc
    ]
    if singular_squares:
        x0, y0 = pos[singular_squares[0] - 1]
        for s in singular_squares[1:]:
            x, y = pos[s - 1]
            vectors.append((x - x0, y - y0))
    # the lattice spanned by `vectors` is all of Z^2 iff a Hermite basis
    # of the span is unimodular
    a = b = c = 0  # invariant: lattice so far is spanned by (a, b), (0, c)
    for x, y in vectors:
        # reduce (x, y) against (a, b), then fold into the basis
        if a != 0 and x != 0:
            g, p, q = _xgcd(a, x)
            a, b, y = g, p * b + q * y, (a // g) * y - (x // g) * b
        elif x != 0:
            a, b, y = x, y, 0
        if a < 0:
            a, b = -a, -b
        c = gcd(c, y)
        if a == 1 and c == 1:
            return True
    return a == 1 and c == 1


def _xgcd(a, b):
    """(g, p, q) with g = gcd(a, b) = p*a + q*b and g >= 0."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_p, p = p, old_p - quot * p
        old_q, q = q, old_q - quot * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def automorphisms(o):
    """All deck transformations: permutations commuting with both h and v.

    Each candidate image of square 1 is propagated through the action;
    consistent bijective assignments form a group containing the identity.
    """
    n = o.degree
    out = []
    for target in range(1, n + 1):
        tau = [0] * (n + 1)
        tau[1] = target
        queue = [1]
        ok = True
        while queue and ok:
            s = queue.pop()
            for gen in (o.h, o.v):
                t, image = gen(s), gen(tau[s])
                if tau[t] == 0:
                    tau[t] = image
                    queue.append(t)
                elif tau[t] != image:
                    ok = False
                    break
        if ok and 0 not in tau[1:] and len(set(tau[1:])) == n:
            perm = Permutation(tau[1:])
            if conjugate(o.h, perm) == o.h and conjugate(o.v, perm) == o.v:
                out.append(perm)
    return out


class CanonicalForm(NamedTuple):
    origami: Origami
    relabel: Permutation


def canonical_form(o):
    """Lexicographically minimal representative of the simultaneous
    conjugacy class.

    For each start square, squares are relabeled in breadth-first
    discovery order with neighbor priority (h, v, h^-1, v^-1); the start
    whose relabeled (h, v) image table is smallest wins.  Returns the
    canonical origami and the relabeling used (new = relabel(old)).
    """
    n = o.degree
    hi, vi = o.h.inverse(), o.v.inverse()
    best = None
    best_relabel = None
    for start in range(1, n + 1):
        new_label = [0] * (n + 1)
        new_label[start] = 1
        order = [start]
        head = 0
        while head < len(order):
            s = order[head]
            head += 1
            for t in (o.h(s), o.v(s), hi(s), vi(s)):
                if new_label[t] == 0:
                    new_label[t] = len(order) + 1
                    order.append(t)
        h_images = [0] * n
        v_images = [0] * n
        for s in range(1, n + 1):
            h_images[new_label[s] - 1] = new_label[o.h(s)]
            v_images[new_label[s] - 1] = new_label[o.v(s)]
        key = (tuple(h_images), tuple(v_images))
        if best is None or key < best:
            best = key
            best_relabel = Permutation(new_label[1:])
    canon = Origami(Permutation(best[0]), Permutation(best[1]), o.label)
    return CanonicalForm(canon, best_relabel)


# ---------------------------------------------------------------------------
# Text format


def parse_origami_text(text):
    """Parse the origami text format:

        # optional name
        n = 8            (optional)
        h = (1,2,3,4)(5,6,7,8)
        v = (1,2,3,5)(4,8,7,6)

    Cycle lists may span several lines.
    """
    label = None
    body_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            if label is None and stripped[1:].strip():
                label = stripped[1:].strip()
            continue
        body_lines.append(line)
    body = "\n".join(body_lines)
    if not body.strip():
        raise ValueError("empty origami file")

    degree_hint = None
    m = re.search(r"\bn\s*=\s*(\d+)", body)
    if m:
        degree_hint = int(m.group(1))
        body = body[: m.start()] + body[m.end() :]

    mh = re.search(r"\bh\s*=", body)
    mv = re.search(r"\bv\s*=", body)
    if mh is None or mv is None:
        raise ValueError("origami file must contain 'h = ...' and 'v = ...'")
    if mh.start() < mv.start():
        h_text = body[mh.end() : mv.start()]
        v_text = body[mv.end() :]
    else:
        v_text = body[mv.end() : mh.start()]
        h_text = body[mh.end() :]
    h = parse_cycles(h_text, degree_hint)
    v = parse_cycles(v_text, degree_hint)
    if h.degree != v.degree:
        d = max(h.degree, v.degree)
        h = parse_cycles(h_text, d)
        v = parse_cycles(v_text, d)
    return Origami(h, v, label)


def render_origami_text(o):
    lines = []
    if o.label:
        lines.append("# %s" % o.label)
    lines.append("n = %d" % o.degree)
    lines.append("h = %s" % render_cycles(o.h))
    lines.append("v = %s" % render_cycles(o.v))
    return "\n".join(lines) + "\n"


def load_origami(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_origami_text(fh.read())


def save_origami(o, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_origami_text(o))
