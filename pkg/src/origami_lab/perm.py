r"""
Exact permutation arithmetic on the symbols {1, .., N}.

All input and output is 1-based.  The composition convention is

    (p * q)(i) = p(q(i)),

i.e. ``q`` acts first.  Every formula in the rest of the library (corner
permutation, T/S action on origamis, chain maps) depends on this choice.
"""

from __future__ import annotations


class Permutation:
    """An immutable bijection of {1, .., N}.

    ``images[i-1]`` is the image of the symbol ``i`` (both 1-based).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images %r are not a bijection of 1..%d" % (images, n))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)

    def __str__(self):
        return render_cycles(self)

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self, include_fixed=False):
        """Cycles as tuples of symbols, each starting at its minimal symbol,
        ordered by that minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                seen[j - 1] = True
                cyc.append(j)
                j = self(j)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self):
        from math import lcm

        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))


def identity(degree):
    return Permutation(range(1, degree + 1))


def compose(p, q):
    """(p * q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise ValueError("degree mismatch: %d vs %d" % (p.degree, q.degree))
    return Permutation(p(q(i)) for i in range(1, p.degree + 1))


def conjugate(p, r):
    """r * p * r^-1."""
    if p.degree != r.degree:
        raise ValueError("degree mismatch: %d vs %d" % (p.degree, r.degree))
    out = [0] * p.degree
    for i in range(1, p.degree + 1):
        out[r(i) - 1] = r(p(i))
    return Permutation(out)


def cycle_type(p):
    """Sorted tuple of cycle lengths (a multiset), summing to the degree."""
    return tuple(sorted(len(c) for c in p.cycles(include_fixed=True)))


def is_transitive(gens):
    """True iff the group generated acts transitively on {1, .., N}."""
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have mismatched degrees")
    seen = [False] * n
    seen[0] = True
    stack = [1]
    count = 1
    while stack:
        i = stack.pop()
        for g in gens:
            for j in (g(i), g.inverse()(i)):
                if not seen[j - 1]:
                    seen[j - 1] = True
                    count += 1
                    stack.append(j)
    return count == n


def parse_cycles(text, degree_hint=None):
    """Parse disjoint cycle notation like ``(1)(2,3)(4,5,6)``.

    Whitespace is ignored everywhere.  Symbols not mentioned are fixed
    points; the degree is the larger of the maximal symbol and
    ``degree_hint``.
    """
    compact = "".join(text.split())
    cycles = []
    pos = 0
    while pos < len(compact):
        if compact[pos] != "(":
            raise ValueError("expected '(' at position %d in %r" % (pos, text))
        end = compact.find(")", pos)
        if end < 0:
            raise ValueError("unbalanced '(' in %r" % (text,))
        body = compact[pos + 1 : end]
        if body:
            try:
                cyc = [int(tok) for tok in body.split(",")]
            except ValueError:
                raise ValueError("malformed cycle %r" % (body,)) from None
            if any(s < 1 for s in cyc):
                raise ValueError("symbols must be positive, got %r" % (cyc,))
            cycles.append(cyc)
        pos = end + 1
    symbols = [s for cyc in cycles for s in cyc]
    if len(set(symbols)) != len(symbols):
        dup = sorted(s for s in set(symbols) if symbols.count(s) > 1)[0]
        raise ValueError("symbol %d repeated across cycles" % dup)
    degree = max(symbols, default=0)
    if degree_hint is not None:
        if degree > degree_hint:
            raise ValueError(
                "symbol %d exceeds the stated degree %d" % (degree, degree_hint)
            )
        degree = max(degree, degree_hint)
    if degree == 0:
        raise ValueError("empty cycle text with no degree hint")
    images = list(range(1, degree + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return Permutation(images)


def render_cycles(p, include_fixed=True):
    """Canonical cycle string; ``parse_cycles(render_cycles(p)) == p``."""
    cycles = p.cycles(include_fixed=include_fixed)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(s) for s in c) + ")" for c in cycles)
