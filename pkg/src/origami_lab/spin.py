r"""
Spin structure invariants of origamis: winding indices, the mod-2
quadratic form phi on homology, its Arf invariant, and the connected
component of the ambient stratum.

For a translation surface whose cone angles are all odd multiples of
2*pi (equivalently: all zero orders even), the function

    phi(gamma) = ind(gamma) + 1 + D(gamma)  (mod 2)

on closed center paths depends only on the homology class mod 2, where
ind is the winding index and D the number of transverse self-crossings
under the deterministic perturbation of the crossing engine.  phi is a
quadratic refinement of the mod-2 intersection pairing and its Arf
invariant separates the even and odd spin components of a stratum.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as la
from .homology import Homology
from .origami import corner_permutation, genus, singularities, stratum
from .paths import (
    generating_loops,
    path_class_chain,
    reduce_path,
    self_crossings,
    winding_index,
)


def phi_of_path(o, path):
    """The quadratic form phi = ind + 1 + D mod 2 of a closed path."""
    reduced = reduce_path(path)
    if reduced is None:
        raise ValueError("path reduces to nothing")
    return (winding_index(o, reduced) + 1 + self_crossings(o, reduced)) % 2


def f2_rank(vectors):
    """Rank over F2 of a list of integer vectors."""
    rows = [[x % 2 for x in v] for v in vectors]
    pivots = []
    rank_count = 0
    for row in rows:
        for p in pivots:
            if row[p[0]]:
                row = [(x + y) % 2 for x, y in zip(row, p[1])]
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is not None:
            pivots.append((lead, row))
            rank_count += 1
    return rank_count


@dataclass
class QuadraticFormData:
    """A spanning family of H_1 classes with phi values and the mod-2
    intersection matrix between them."""

    basis: list  # integer coordinate vectors in an H_1 basis
    phi_values: list  # 0/1 per class
    intersection_mod2: list  # symmetric F2 matrix between the classes

    def validate(self):
        k = len(self.basis)
        if len(self.phi_values) != k or len(self.intersection_mod2) != k:
            raise ValueError("inconsistent quadratic form data sizes")
        for i in range(k):
            for j in range(k):
                if self.intersection_mod2[i][j] != self.intersection_mod2[j][i]:
                    raise ValueError("mod-2 intersection matrix must be symmetric")


def arf_from_data(q):
    """Arf invariant of a quadratic form given on a spanning family.

    Symplectic Gram-Schmidt over F2: repeatedly extract a pair (a, b)
    with odd pairing, correct the remaining classes by
    c -> c + <c,b> a + <c,a> b (updating phi through the quadratic
    relation), and accumulate phi(a) phi(b).
    """
    q.validate()
    g2 = [row[:] for row in q.intersection_mod2]
    phi = [x % 2 for x in q.phi_values]
    alive = list(range(len(phi)))
    arf = 0
    while True:
        pair = None
        for ai, x in enumerate(alive):
            for y in alive[ai + 1 :]:
                if g2[x][y] % 2:
                    pair = (x, y)
                    break
            if pair:
                break
        if pair is None:
            # everything left pairs to zero with everything else
            if any(g2[x][y] % 2 for x in alive for y in alive):
                raise AssertionError("pair search missed an odd pairing")
            return arf % 2
        x, y = pair
        arf += phi[x] * phi[y]
        alive = [c for c in alive if c not in (x, y)]
        coeffs = {c: (g2[c][y] % 2, g2[c][x] % 2) for c in alive}
        for c in alive:
            al, be = coeffs[c]
            phi[c] = (
                phi[c]
                + al * phi[x]
                + be * phi[y]
                + al * g2[c][x]
                + be * g2[c][y]
                + al * be * g2[x][y]
            ) % 2
        # replace rows/columns: c -> c + al*x + be*y
        for c in alive:
            al, be = coeffs[c]
            g2[c] = [(v + al * vx + be * vy) % 2 for v, vx, vy in zip(g2[c], g2[x], g2[y])]
        for c in alive:
            al, be = coeffs[c]
            for r in range(len(phi)):
                g2[r][c] = (g2[r][c] + al * g2[r][x] + be * g2[r][y]) % 2


def _quadratic_value(phi_basis, gram, support):
    """phi of a sum of basis elements from the quadratic relation."""
    support = list(support)
    val = sum(phi_basis[i] for i in support)
    for a in range(len(support)):
        for b in range(a + 1, len(support)):
            val += gram[support[a]][support[b]]
    return val % 2


def quadratic_form_data(o):
    """Evaluate phi on a spanning loop family and package the result.

    The loop pool is grown until its classes span H_1 over F2; phi values
    of the dependent loops are cross-checked against the quadratic
    relation, so any representative-dependence of phi would be caught
    here.
    """
    orders = singularities(o)
    if any(k % 2 for k in orders):
        raise ValueError("spin structure requires all zero orders even")
    hom = Homology(o)
    target = hom.rank

    def rank_fn(chains):
        return f2_rank(hom.project_many(chains))

    pool = generating_loops(o, rank_fn, target)
    coords = hom.project_many([path_class_chain(o, p) for p in pool])
    phis = [phi_of_path(o, p) for p in pool]
    # greedy F2-independent subset
    chosen = []
    rank_so_far = 0
    for i in range(len(pool)):
        if f2_rank([coords[j] for j in chosen] + [coords[i]]) > rank_so_far:
            chosen.append(i)
            rank_so_far += 1
    if rank_so_far != target:
        raise AssertionError("loop family does not span H_1 over F2")
    basis = [coords[i] for i in chosen]
    phi_basis = [phis[i] for i in chosen]
    gram = [
        [hom.pairing_in_basis(u, v) % 2 for v in basis]
        for u in basis
    ]
    # consistency: dependent loops must satisfy the quadratic relation
    b2 = [[x % 2 for x in v] for v in basis]
    for i in range(len(pool)):
        if i in chosen:
            continue
        sol = _solve_f2(b2, [x % 2 for x in coords[i]])
        if sol is None:
            raise AssertionError("basis extraction lost a class")
        support = [j for j, c in enumerate(sol) if c]
        if _quadratic_value(phi_basis, gram, support) != phis[i]:
            raise AssertionError(
                "phi is not well defined on homology classes (loop %d)" % i
            )
    return QuadraticFormData(
        basis=basis, phi_values=phi_basis, intersection_mod2=gram
    )


def _solve_f2(basis_vectors, target):
    """Express target as an F2 combination of basis_vectors (as columns);
    returns the coefficient list or None."""
    k = len(basis_vectors)
    if k == 0:
        return None
    n = len(basis_vectors[0])
    aug = [[basis_vectors[j][i] % 2 for j in range(k)] + [target[i] % 2] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        for i in range(n):
            if i != r and aug[i][c]:
                aug[i] = [(x + y) % 2 for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [0] * k
    for row_idx, c in enumerate(pivots):
        sol[c] = aug[row_idx][k]
    for i in range(r, n):
        if aug[i][k]:
            return None
    # verify
    for i in range(n):
        if sum(basis_vectors[j][i] * sol[j] for j in range(k)) % 2 != target[i] % 2:
            return None
    return sol


def spin_parity(o):
    """Arf invariant of the spin structure of an origami with even zero
    orders (the parity separating stratum components)."""
    return arf_from_data(quadratic_form_data(o))


# ---------------------------------------------------------------------------
# Hyperelliptic involutions


def hyperelliptic_involution(o):
    """A square permutation rho realizing the 180-degree rotation, if one
    exists with the right fixed-point count.

    rho must intertwine rotation: rho h = h^-1 rho and rho v = v^-1 rho,
    and square to the identity.  Its fixed points on the surface are
    counted from the in-square rules (square centers with rho(i) = i,
    horizontal edge midpoints with v(rho(i)) = i, vertical edge midpoints
    with h(rho(i)) = i, and vertex classes preserved by the induced
    vertex map).  Returns (rho, fixed point count) for the first rho whose
    count equals 2g + 2, else None.
    """
    from .perm import Permutation

    n = o.degree
    g = genus(o)
    hi, vi = o.h.inverse(), o.v.inverse()
    for target in range(1, n + 1):
        rho = [0] * (n + 1)
        rho[1] = target
        queue = [1]
        ok = True
        while queue and ok:
            s = queue.pop()
            for gen, geninv in ((o.h, hi), (o.v, vi)):
                t, image = gen(s), geninv(rho[s])
                if rho[t] == 0:
                    rho[t] = image
                    queue.append(t)
                elif rho[t] != image:
                    ok = False
                    break
        if not ok or 0 in rho[1:] or len(set(rho[1:])) != n:
            continue
        perm = Permutation(rho[1:])
        if not (perm * perm).is_identity():
            continue
        count = _rotation_fixed_points(o, perm)
        if count == 2 * g + 2:
            return perm, count
    return None


def _rotation_fixed_points(o, rho):
    n = o.degree
    centers = sum(1 for i in range(1, n + 1) if rho(i) == i)
    h_mid = sum(1 for i in range(1, n + 1) if o.v(rho(i)) == i)
    v_mid = sum(1 for i in range(1, n + 1) if o.h(rho(i)) == i)
    c = corner_permutation(o)
    cycles = c.cycles(include_fixed=True)
    cls = [0] * (n + 1)
    for idx, cyc in enumerate(cycles):
        for s in cyc:
            cls[s] = idx
    fixed_vertices = 0
    for cyc in cycles:
        images = {cls[o.v(o.h(rho(s)))] for s in cyc}
        if len(images) != 1:
            raise AssertionError("vertex image of a rotation is not well defined")
        if images.pop() == cls[cyc[0]]:
            fixed_vertices += 1
    return centers + h_mid + v_mid + fixed_vertices


def is_hyperelliptic(o):
    return hyperelliptic_involution(o) is not None


# ---------------------------------------------------------------------------
# Stratum components


def component(o):
    """Connected component of the stratum containing the origami.

    Classification of components of strata: genus 2 strata are connected;
    the minimal stratum H(2g-2) for g >= 3 splits by hyperellipticity and
    spin parity; H(g-1, g-1) splits by hyperellipticity (and parity when
    g-1 is even and g >= 4); all remaining strata with some odd order are
    connected, and remaining all-even strata split by parity for g >= 4.
    Returns one of: connected, hyperelliptic, even-spin, odd-spin,
    hyperelliptic-or-spin-undecided.
    """
    st = stratum(o)
    g = st.genus
    orders = st.orders
    if g <= 2:
        return "connected"
    minimal = len(orders) == 1
    two_equal = len(orders) == 2 and orders[0] == orders[1]
    all_even = all(k % 2 == 0 for k in orders)
    if minimal:
        # three components for g >= 4, two for g = 3 (hyperelliptic = even)
        if is_hyperelliptic(o):
            return "hyperelliptic"
        return "odd-spin" if spin_parity(o) else "even-spin"
    if two_equal:
        if is_hyperelliptic(o):
            return "hyperelliptic"
        if all_even:
            if g == 3:
                return "odd-spin"
            return "odd-spin" if spin_parity(o) else "even-spin"
        return "connected"
    if all_even:
        if g == 3:
            # H(2,2): hyperelliptic handled above via two_equal; other
            # all-even genus 3 strata do not occur
            return "hyperelliptic-or-spin-undecided"
        return "odd-spin" if spin_parity(o) else "even-spin"
    return "connected"
