r"""
Integral cellular homology of an origami and the action of affine
homeomorphisms on it.

The cell structure has one vertex class per corner-permutation cycle, two
edges per square (sigma_i: bottom edge, zeta_i: left edge) and one square
2-cell per symbol.  Edge chains are integer vectors of length 2N with
sigma_i at index i-1 and zeta_i at index N+i-1.  The boundary of square i
is sigma_i + zeta_{h(i)} - sigma_{v(i)} - zeta_i.

All arithmetic in this module is exact (integers and fractions); no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .origami import automorphisms, canonical_form, corner_permutation, genus
from .orbit import Sl2zWord, sl2z_orbit


# ---------------------------------------------------------------------------
# Chain complex


@dataclass(frozen=True)
class ChainComplexData:
    boundary1: list  # V x 2N
    boundary2: list  # 2N x N


def chain_complex(o):
    n = o.degree
    c = corner_permutation(o)
    vertex_cycles = c.cycles(include_fixed=True)
    vertex_of = [0] * (n + 1)
    for idx, cyc in enumerate(vertex_cycles):
        for s in cyc:
            vertex_of[s] = idx
    nv = len(vertex_cycles)

    b2 = la.zeros(2 * n, n)
    for i in range(1, n + 1):
        b2[i - 1][i - 1] += 1  # sigma_i
        b2[n + o.h(i) - 1][i - 1] += 1  # zeta_{h(i)}
        b2[o.v(i) - 1][i - 1] -= 1  # -sigma_{v(i)}
        b2[n + i - 1][i - 1] -= 1  # -zeta_i

    b1 = la.zeros(nv, 2 * n)
    for i in range(1, n + 1):
        # sigma_i runs from the corner of square i to the corner of h(i)
        b1[vertex_of[o.h(i)]][i - 1] += 1
        b1[vertex_of[i]][i - 1] -= 1
        # zeta_i runs from the corner of square i to the corner of v(i)
        b1[vertex_of[o.v(i)]][n + i - 1] += 1
        b1[vertex_of[i]][n + i - 1] -= 1

    if any(x != 0 for row in la.mat_mul(b1, b2) for x in row):
        raise AssertionError("boundary maps do not compose to zero")
    return ChainComplexData(boundary1=b1, boundary2=b2)


def intersection_pairing(o_or_hom, x, y):
    """Algebraic intersection number of two edge cycles.

    Both inputs must be cycles (boundary-1 zero); the value only depends on
    their homology classes and is computed through the intersection matrix
    of the homology basis."""
    hom = o_or_hom if isinstance(o_or_hom, Homology) else Homology(o_or_hom)
    cx, cy = hom.project_many([x, y])
    return hom.pairing_in_basis(cx, cy)


class Homology:
    """H_1(X; Z) with a fixed integral basis, intersection matrix and
    tautological data, for one origami."""

    def __init__(self, o):
        self.origami = o
        n = o.degree
        self.complex = chain_complex(o)
        k_cols = la.kernel_basis(self.complex.boundary1)
        self.k_matrix = [[col[i] for col in k_cols] for i in range(2 * n)]
        # express boundaries in kernel coordinates
        x = la.solve_right(self.k_matrix, self.complex.boundary2)
        if x is None or not la.is_integral(x):
            raise AssertionError("image of boundary2 must lie in the kernel lattice")
        x = la.to_int_matrix(x)
        d, u, _v = la.smith_normal_form(x)
        k = len(k_cols)
        r = sum(1 for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i] != 0)
        if any(d[i][i] not in (0, 1) for i in range(min(len(d), len(d[0]) if d else 0))):
            raise AssertionError("H_1 of a closed orientable surface must be free")
        self.u_matrix = u  # unimodular k x k; U @ x = D
        uinv = la.to_int_matrix(la.invert(u))
        free = [uinv_col for uinv_col in range(r, k)]
        # basis columns in edge coordinates
        self.basis = la.mat_mul(
            self.k_matrix, [[uinv[i][j] for j in free] for i in range(k)]
        )
        self.rank = k - r
        self._free_start = r
        if self.rank != 2 * genus(o):
            raise AssertionError("H_1 rank must equal 2g")
        self.intersection = self._intersection_matrix()
        if la.det(self.intersection) != 1:
            raise AssertionError("intersection form must be unimodular")
        sigma_sum = [1] * n + [0] * n
        zeta_sum = [0] * n + [1] * n
        self.taut_sigma = self.project(sigma_sum)
        self.taut_zeta = self.project(zeta_sum)

    def _intersection_matrix(self):
        """Intersection form in basis coordinates, solved from exact
        signed crossing numbers of center-path loop representatives."""
        from .paths import generating_loops, path_class_chain, signed_crossings

        o = self.origami

        def q_rank(chains):
            if not chains:
                return 0
            return la.rank(self.project_many(chains))

        pool = generating_loops(o, q_rank, self.rank)
        coords = self.project_many([path_class_chain(o, p) for p in pool])
        span = la.RationalSpan()
        idx = [i for i, c in enumerate(coords) if span.add(c)]
        assert len(idx) == self.rank
        sel = [pool[i] for i in idx]
        g = la.zeros(self.rank, self.rank)
        for a in range(self.rank):
            for b in range(a + 1, self.rank):
                val = signed_crossings(o, sel[a], sel[b])
                g[a][b] = val
                g[b][a] = -val
        p = [[coords[i][r] for i in idx] for r in range(self.rank)]
        pinv = la.invert(p)
        j = la.mat_mul(la.transpose(pinv), la.mat_mul(g, pinv))
        if not la.is_integral(j):
            raise AssertionError("intersection form came out non-integral")
        j = la.to_int_matrix(j)
        if any(j[a][b] != -j[b][a] for a in range(self.rank) for b in range(self.rank)):
            raise AssertionError("intersection form must be skew")
        # cross-validate on pool elements outside the chosen basis
        rest = [i for i in range(len(pool)) if i not in idx][:6]
        for i in rest:
            for a in range(min(self.rank, 4)):
                via_j = sum(
                    coords[i][r] * j[r][s] * coords[idx[a]][s]
                    for r in range(self.rank)
                    for s in range(self.rank)
                )
                direct = signed_crossings(o, pool[i], sel[a])
                if via_j != direct:
                    raise AssertionError(
                        "crossing engine disagrees with the bilinear form"
                    )
        return j

    def project_many(self, chains):
        """Coordinates of edge cycles in the H_1 basis; columns in, columns
        out."""
        n2 = 2 * self.origami.degree
        rhs = [[chain[i] for chain in chains] for i in range(n2)]
        y = la.solve_right(self.k_matrix, rhs)
        if y is None or not la.is_integral(y):
            raise ValueError("chain is not a cycle (or not integral)")
        y = la.to_int_matrix(y)
        w = la.mat_mul(self.u_matrix, y)
        return [
            [w[self._free_start + i][j] for i in range(self.rank)]
            for j in range(len(chains))
        ]

    def project(self, chain):
        return self.project_many([chain])[0]

    def class_to_chain(self, coords):
        """An edge-cycle representative of a homology class."""
        return la.mat_vec(self.basis, list(coords))

    def pairing_in_basis(self, x, y):
        return sum(
            xi * self.intersection[i][j] * yj
            for i, xi in enumerate(x)
            for j, yj in enumerate(y)
            if xi and yj
        )

    def holonomy(self, coords):
        """Total (horizontal, vertical) holonomy of a class."""
        chain = self.class_to_chain(coords)
        n = self.origami.degree
        return (sum(chain[:n]), sum(chain[n:]))


def h1_basis(o):
    return Homology(o)


def tautological_split(o_or_hom):
    """(H1_st, H1_zero): coordinates (in the h1_basis) of the tautological
    plane span{sum sigma, sum zeta} and a saturated integral basis of the
    zero-holonomy subspace; dim H1_zero = 2g - 2."""
    hom = o_or_hom if isinstance(o_or_hom, Homology) else Homology(o_or_hom)
    st = [hom.taut_sigma, hom.taut_zeta]
    n = hom.origami.degree
    hol_rows = [
        [sum(hom.basis[i][j] for i in range(n)) for j in range(hom.rank)],
        [sum(hom.basis[n + i][j] for i in range(n)) for j in range(hom.rank)],
    ]
    zero = la.kernel_basis(hol_rows)
    if len(zero) != hom.rank - 2:
        raise AssertionError("zero-holonomy subspace must have dimension 2g-2")
    return st, zero


# ---------------------------------------------------------------------------
# Cocycle matrices


@dataclass(frozen=True)
class CocycleMatrix:
    matrix: tuple  # rows of ints: target coords = matrix @ source coords
    source: object  # canonical Origami
    target: object
    word: Sl2zWord
    ambiguity: tuple = ()  # automorphism action matrices when Aut nontrivial

    def to_json(self):
        return {
            "matrix": [list(r) for r in self.matrix],
            "word": str(self.word),
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "ambiguity": [[list(r) for r in m] for m in self.ambiguity],
        }


# edge-level chain maps for each generator letter: for each source square i
# return (list of (edge index in target, coefficient) for sigma_i,
#         same for zeta_i, target 2-cell of i)


def _edge_map(o, letter, relabel, n):
    """Edge chain map as a 2N x 2N integer matrix plus the 2-cell map."""
    h, v = o.h, o.v
    hi, vi = h.inverse(), v.inverse()
    f = la.zeros(2 * n, 2 * n)
    cell = [0] * (n + 1)
    r = relabel
    for i in range(1, n + 1):
        if letter == "T":
            # sigma_i -> sigma'_{r(i)}; zeta_i -> sigma'_{r(i)} + zeta'_{r(h(i))}
            f[r(i) - 1][i - 1] += 1
            f[r(i) - 1][n + i - 1] += 1
            f[n + r(h(i)) - 1][n + i - 1] += 1
            cell[i] = r(h(i))
        elif letter == "t":
            f[r(i) - 1][i - 1] += 1
            f[n + r(hi(i)) - 1][n + i - 1] += 1
            f[r(hi(i)) - 1][n + i - 1] -= 1
            cell[i] = r(hi(i))
        elif letter == "S":
            # zeta_i -> zeta'_{r(i)}; sigma_i -> zeta'_{r(i)} + sigma'_{r(v(i))}
            f[n + r(i) - 1][n + i - 1] += 1
            f[n + r(i) - 1][i - 1] += 1
            f[r(v(i)) - 1][i - 1] += 1
            cell[i] = r(v(i))
        elif letter == "s":
            f[n + r(i) - 1][n + i - 1] += 1
            f[r(vi(i)) - 1][i - 1] += 1
            f[n + r(vi(i)) - 1][i - 1] -= 1
            cell[i] = r(vi(i))
        else:
            raise ValueError("unknown letter %r" % letter)
    return f, cell


class KzContext:
    """Cached orbit graph, per-node homology and per-edge step matrices for
    one SL(2,Z)-orbit."""

    def __init__(self, o):
        self.graph = sl2z_orbit(o)
        self._homology = {}
        self._steps = {}
        self._aut_matrices = {}

    def homology(self, node):
        if node not in self._homology:
            self._homology[node] = Homology(self.graph.nodes[node])
        return self._homology[node]

    def step(self, node, letter):
        """(target node, integer matrix H1(node) -> H1(target))."""
        key = (node, letter)
        if key in self._steps:
            return self._steps[key]
        src = self.graph.nodes[node]
        target_node, relabel = self.graph.edges[node][letter]
        n = src.degree
        f, cell = _edge_map(src, letter, relabel, n)
        hs = self.homology(node)
        ht = self.homology(target_node)
        # chain-map law against the target complex
        b2s = hs.complex.boundary2
        b2t = ht.complex.boundary2
        fb2 = la.mat_mul(f, b2s)
        for i in range(1, n + 1):
            img = [fb2[e][i - 1] for e in range(2 * n)]
            tgt = [b2t[e][cell[i] - 1] for e in range(2 * n)]
            if img != tgt:
                raise AssertionError("chain-map law violated for letter %r" % letter)
        images = [
            la.mat_vec(f, [hs.basis[e][j] for e in range(2 * n)])
            for j in range(hs.rank)
        ]
        cols = ht.project_many(images)
        m = [[cols[j][i] for j in range(hs.rank)] for i in range(ht.rank)]
        # symplecticity: M^T J_t M = J_s
        mt = la.transpose(m)
        if not la.mat_eq(la.mat_mul(mt, la.mat_mul(ht.intersection, m)), hs.intersection):
            raise AssertionError("step matrix is not symplectic")
        self._steps[key] = (target_node, m)
        return self._steps[key]

    def aut_matrices(self, node):
        """H_1 action matrices of the deck transformations of a node."""
        if node not in self._aut_matrices:
            o = self.graph.nodes[node]
            hom = self.homology(node)
            n = o.degree
            mats = []
            for tau in automorphisms(o):
                if tau.is_identity():
                    continue
                images = []
                for j in range(hom.rank):
                    col = [hom.basis[e][j] for e in range(2 * n)]
                    img = [0] * (2 * n)
                    for i in range(1, n + 1):
                        img[tau(i) - 1] += col[i - 1]
                        img[n + tau(i) - 1] += col[n + i - 1]
                    images.append(img)
                cols = hom.project_many(images)
                mats.append(
                    tuple(
                        tuple(cols[j][i] for j in range(hom.rank))
                        for i in range(hom.rank)
                    )
                )
            self._aut_matrices[node] = tuple(mats)
        return self._aut_matrices[node]

    def word_matrix(self, word, start=None):
        """(end node, accumulated H1 matrix) for a word applied at a node;
        letters act right to left."""
        node = self.graph.basepoint if start is None else start
        total = la.identity_matrix(self.homology(node).rank)
        for letter in reversed(word.letters):
            node, m = self.step(node, letter)
            total = la.mat_mul(m, total)
        return node, total


_context_cache = {}


def kz_context(o):
    canon = canonical_form(o).origami
    if canon not in _context_cache:
        _context_cache[canon] = KzContext(canon)
    return _context_cache[canon]


def step_matrix(o, letter):
    """The cocycle matrix of a single generator letter at an origami."""
    ctx = kz_context(o)
    node = ctx.graph.basepoint
    target, m = ctx.step(node, letter)
    return CocycleMatrix(
        matrix=tuple(tuple(row) for row in m),
        source=ctx.graph.nodes[node],
        target=ctx.graph.nodes[target],
        word=Sl2zWord((letter,)),
        ambiguity=ctx.aut_matrices(node),
    )


def kz_matrix(o, word):
    """The Kontsevich-Zorich cocycle matrix of a word stabilizing the
    canonical form of ``o``.

    If the origami has nontrivial deck transformations the matrix is only
    well-defined up to left composition with the listed ambiguity
    matrices.
    """
    if not isinstance(word, Sl2zWord):
        word = Sl2zWord.parse(word)
    ctx = kz_context(o)
    end, total = ctx.word_matrix(word)
    if end != ctx.graph.basepoint:
        raise ValueError("word %s does not return to the basepoint" % word)
    return CocycleMatrix(
        matrix=tuple(tuple(row) for row in total),
        source=ctx.graph.nodes[ctx.graph.basepoint],
        target=ctx.graph.nodes[end],
        word=word,
        ambiguity=ctx.aut_matrices(ctx.graph.basepoint),
    )


def restrict(m, sub_source, sub_target=None):
    """Matrix of a cocycle map on an invariant subspace.

    ``sub_source``/``sub_target`` are lists of basis columns (source and
    target coordinates); the result R solves  M @ sub_source = sub_target
    @ R and must be integral."""
    if sub_target is None:
        sub_target = sub_source
    mat = [list(r) for r in (m.matrix if isinstance(m, CocycleMatrix) else m)]
    src = [[col[i] for col in sub_source] for i in range(len(mat[0]))]
    tgt = [[col[i] for col in sub_target] for i in range(len(mat))]
    img = la.mat_mul(mat, src)
    sol = la.solve_right(tgt, img)
    if sol is None:
        raise ValueError("subspace is not invariant under the map")
    if not la.mat_eq(la.mat_mul(tgt, sol), img):
        raise ValueError("subspace is not invariant under the map")
    if not la.is_integral(sol):
        raise ValueError("restriction is not integral on the given lattice basis")
    return la.to_int_matrix(sol)


def isotypical_W(o, tau):
    """Saturated integral basis (in h1_basis coordinates) of the
    (-1)-eigenspace of a central involution tau acting on H_1."""
    from .perm import conjugate

    hom = o if isinstance(o, Homology) else Homology(o)
    surface = hom.origami
    if conjugate(surface.h, tau) != surface.h or conjugate(surface.v, tau) != surface.v:
        raise ValueError("tau is not an automorphism of the origami")
    if not (tau * tau).is_identity():
        raise ValueError("tau must be an involution")
    n = hom.origami.degree
    images = []
    for j in range(hom.rank):
        col = [hom.basis[e][j] for e in range(2 * n)]
        img = [0] * (2 * n)
        for i in range(1, n + 1):
            img[tau(i) - 1] += col[i - 1]
            img[n + tau(i) - 1] += col[n + i - 1]
        images.append(img)
    cols = hom.project_many(images)
    rho = [[cols[j][i] for j in range(hom.rank)] for i in range(hom.rank)]
    plus_id = la.mat_add(rho, la.identity_matrix(hom.rank))
    return la.kernel_basis(plus_id)


# ---------------------------------------------------------------------------
# Unipotent logarithms and Lie closures


def unipotent_log(m):
    """log(m) for unipotent m via the finite series
    sum (-1)^(k+1) (m - Id)^k / k; exact rational output."""
    n = len(m)
    mf = [[Fraction(x) for x in row] for row in m]
    nil = la.mat_sub(mf, la.identity_matrix(n))
    # check nilpotency
    power = nil
    k = 1
    while any(x != 0 for row in power for x in row):
        k += 1
        if k > n:
            raise ValueError("matrix is not unipotent")
        power = la.mat_mul(power, nil)
    out = la.zeros(n, n)
    term = la.identity_matrix(n)
    for j in range(1, n + 1):
        term = la.mat_mul(term, nil)
        if all(x == 0 for row in term for x in row):
            break
        sign = Fraction((-1) ** (j + 1), j)
        out = la.mat_add(out, la.mat_scale(sign, term))
    return out


def exp_nilpotent(m):
    """exp of a nilpotent rational matrix (finite series)."""
    n = len(m)
    out = la.identity_matrix(n)
    term = la.identity_matrix(n)
    for j in range(1, n + 1):
        term = la.mat_scale(Fraction(1, j), la.mat_mul(term, m))
        if all(x == 0 for row in term for x in row):
            break
        out = la.mat_add(out, term)
    return out


def lie_algebra_dim(gens):
    """Dimension of the smallest linear space containing ``gens`` and
    closed under the bracket [X, Y] = XY - YX."""
    if not gens:
        return 0
    span = la.RationalSpan()
    basis = []
    queue = []
    for g in gens:
        gf = [[Fraction(x) for x in row] for row in g]
        if span.add([x for row in gf for x in row]):
            basis.append(gf)
            queue.append(gf)
    while queue:
        new = queue.pop()
        for other in list(basis):
            for x, y in ((new, other), (other, new)):
                br = la.bracket(x, y)
                if span.add([c for row in br for c in row]):
                    basis.append(br)
                    queue.append(br)
    return span.dim
