r"""
Certificates for simplicity of the Lyapunov spectrum of an origami.

For a reduced genus-3 origami with trivial automorphisms, the spectrum of
the homology cocycle on the 4-dimensional zero-holonomy part is simple
once two ingredients are exhibited:

  * a loop word in the Veech group whose zero-holonomy matrix is
    pinching (irreducible reciprocal quartic, real simple roots, maximal
    Galois group), and
  * either a direction in which the waist curves of the cylinder
    decomposition span a subspace E with 1 < dim E < g, or a parabolic
    element whose zero-holonomy matrix B is not the identity and whose
    image (B - Id) is not a Lagrangian subspace.

Everything in a certificate is integer data that can be re-derived from
scratch, which is exactly what verify_certificate does.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import intlinalg as la
from .galois import is_galois_pinching_sp4
from .homology import Homology, kz_context, restrict, tautological_split
from .origami import Origami, automorphisms, canonical_form, genus, is_reduced
from .orbit import Sl2zWord, apply_letter_raw

_LETTER_ORDER = ("T", "S", "t", "s")
_INVERSE = {"T": "t", "t": "T", "S": "s", "s": "S"}


def horizontal_cylinder_classes(o, hom=None):
    """Waist classes of the horizontal cylinders: for each cycle of h,
    the class of the sum of the bottom edges along the cycle."""
    if hom is None:
        hom = Homology(o)
    n = o.degree
    chains = []
    for cyc in o.h.cycles(include_fixed=True):
        chain = [0] * (2 * n)
        for s in cyc:
            chain[s - 1] = 1
        chains.append(chain)
    return hom.project_many(chains)


def cylinder_span_dim(o, direction=None):
    """Rank of the waist classes of the horizontal cylinders of the
    origami reached by applying ``direction`` (an Sl2zWord) to o."""
    img = o
    if direction is not None and len(direction) > 0:
        for letter in reversed(direction.letters):
            img = apply_letter_raw(img, letter)
    classes = horizontal_cylinder_classes(img)
    return la.rank(classes)


def parabolic_word(o, direction="horizontal"):
    """Smallest power of the elementary parabolic (T for horizontal, S
    for vertical) stabilizing the canonical form of o, as a word."""
    if direction not in ("horizontal", "vertical"):
        raise ValueError("direction must be 'horizontal' or 'vertical'")
    letter = "T" if direction == "horizontal" else "S"
    ctx = kz_context(o)
    node = ctx.graph.basepoint
    k = 0
    while True:
        node = ctx.graph.edges[node][letter][0]
        k += 1
        if node == ctx.graph.basepoint:
            return Sl2zWord((letter,) * k)
        if k > len(ctx.graph.nodes):
            raise AssertionError("parabolic never returned to the basepoint")


def _zero_context(ctx):
    """Per-node zero-holonomy bases and per-edge restricted step
    matrices for an orbit context."""
    zero = {}
    for node in range(len(ctx.graph.nodes)):
        _st, z = tautological_split(ctx.homology(node))
        zero[node] = z
    steps = {}
    for node in range(len(ctx.graph.nodes)):
        for letter in _LETTER_ORDER:
            target, m = ctx.step(node, letter)
            steps[(node, letter)] = (target, restrict(m, zero[node], zero[target]))
    return zero, steps


def _zero_form(hom, zero):
    """Intersection form restricted to the zero-holonomy basis."""
    j = hom.intersection
    k = len(zero)
    return [
        [
            sum(zero[a][r] * j[r][s] * zero[b][s] for r in range(hom.rank) for s in range(hom.rank))
            for b in range(k)
        ]
        for a in range(k)
    ]


@dataclass
class UnipotentWitness:
    word: Sl2zWord
    rank_b_minus_id: int
    isotropic: bool

    def to_json(self):
        return {
            "kind": "unipotent",
            "word": str(self.word),
            "rank_b_minus_id": self.rank_b_minus_id,
            "isotropic": self.isotropic,
        }


@dataclass
class CylinderWitness:
    direction: Sl2zWord  # empty word means the horizontal direction itself
    dim_e: int
    genus: int

    def to_json(self):
        return {
            "kind": "cylinder",
            "direction": str(self.direction) if len(self.direction) else "",
            "dim_e": self.dim_e,
            "genus": self.genus,
        }


@dataclass
class SimplicityCertificate:
    origami: Origami  # canonical form
    pinching_word: Sl2zWord
    quartic: object  # ReciprocalQuartic
    witness: object  # UnipotentWitness or CylinderWitness

    def to_json(self):
        return {
            "origami": self.origami.to_json(),
            "pinching_word": str(self.pinching_word),
            "quartic": self.quartic.to_json(),
            "witness": self.witness.to_json(),
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


@dataclass
class NotFound:
    explored_depth: int


def _check_preconditions(o):
    if not is_reduced(o):
        raise ValueError("simplicity certification requires a reduced origami")
    if len(automorphisms(o)) != 1:
        raise ValueError("simplicity certification requires trivial automorphisms")
    if genus(o) != 3:
        raise ValueError("simplicity certification is implemented for genus 3 only")


def find_pinching_word(o, search_depth):
    """Shortest loop word at the canonical form whose zero-holonomy
    matrix is pinching; words are enumerated by length and then in the
    letter order T, S, T^-1, S^-1, skipping immediate backtracks.

    Returns (word, Sp4PinchingReport) or None.
    """
    ctx = kz_context(o)
    base = ctx.graph.basepoint
    _zero, steps = _zero_context(ctx)
    dim = len(steps[(base, "T")][1])
    ident = la.identity_matrix(dim)

    for depth in range(1, search_depth + 1):
        stack = [(base, ident, ())]
        while stack:
            node, mat, letters = stack.pop()
            if len(letters) == depth:
                if node == base:
                    report = is_galois_pinching_sp4(mat)
                    if report.pinching:
                        # the path applies letters left to right, so the
                        # word (whose leftmost letter acts last) is the
                        # reversed letter sequence
                        return Sl2zWord(tuple(reversed(letters))), report
                continue
            # push children in reverse so they pop in T, S, t, s order
            for letter in reversed(_LETTER_ORDER):
                if letters and _INVERSE[letters[-1]] == letter:
                    continue
                target, step = steps[(node, letter)]
                # letters act right to left: appending a letter means
                # multiplying on the left by the new step applied last;
                # enumerate words whose application order is left to
                # right along the path, i.e. build the word reversed
                stack.append((target, la.mat_mul(step, mat), letters + (letter,)))
    return None


def _cylinder_witness(ctx, g):
    """A direction (as a word reaching an orbit node) where the waist
    span E has 1 < dim E < g, if one exists."""
    graph = ctx.graph
    n = len(graph.nodes)
    path_to = [None] * n
    path_to[graph.basepoint] = ()
    frontier = [graph.basepoint]
    while frontier:
        nxt = []
        for i in frontier:
            for letter in _LETTER_ORDER:
                j = graph.edges[i][letter][0]
                if path_to[j] is None:
                    path_to[j] = path_to[i] + (letter,)
                    nxt.append(j)
        frontier = nxt
    for node in range(n):
        classes = horizontal_cylinder_classes(graph.nodes[node], ctx.homology(node))
        dim_e = la.rank(classes)
        if 1 < dim_e < g:
            # word applying path letters in order: first letter acts first
            word_letters = tuple(reversed(path_to[node]))
            word = Sl2zWord(word_letters) if word_letters else Sl2zWord(())
            if word_letters:
                assert graph.trace(graph.basepoint, word) == node
            return CylinderWitness(direction=word, dim_e=dim_e, genus=g)
    return None


def _image_is_lagrangian(b, form, g):
    """(rank, isotropic, lagrangian) for the image of b - Id."""
    dim = len(b)
    bmi = la.mat_sub(b, la.identity_matrix(dim))
    cols = [[bmi[r][c] for r in range(dim)] for c in range(dim)]
    rank = la.rank(cols)
    isotropic = all(
        sum(u[r] * form[r][s] * v[s] for r in range(dim) for s in range(dim)) == 0
        for u in cols
        for v in cols
    )
    return rank, isotropic, (rank == g - 1 and isotropic)


def _unipotent_witness(ctx, g):
    base = ctx.graph.basepoint
    zero, steps = _zero_context(ctx)
    form = _zero_form(ctx.homology(base), zero[base])
    for direction in ("horizontal", "vertical"):
        word = parabolic_word(ctx.graph.nodes[base], direction)
        node, mat = base, la.identity_matrix(len(zero[base]))
        for letter in reversed(word.letters):
            node, step = steps[(node, letter)]
            mat = la.mat_mul(step, mat)
        if node != base:
            raise AssertionError("parabolic word did not close up")
        if la.mat_eq(mat, la.identity_matrix(len(mat))):
            continue
        rank, isotropic, lagrangian = _image_is_lagrangian(mat, form, g)
        if not lagrangian:
            return UnipotentWitness(word=word, rank_b_minus_id=rank, isotropic=isotropic)
    return None


def certify_simplicity(o, search_depth=12):
    """Search for a complete simplicity certificate; NotFound (which is
    not a disproof) when the word search is exhausted."""
    _check_preconditions(o)
    canon = canonical_form(o).origami
    found = find_pinching_word(canon, search_depth)
    if found is None:
        return NotFound(explored_depth=search_depth)
    word, report = found
    ctx = kz_context(canon)
    g = genus(canon)
    witness = _cylinder_witness(ctx, g)
    if witness is None:
        witness = _unipotent_witness(ctx, g)
    if witness is None:
        return NotFound(explored_depth=search_depth)
    return SimplicityCertificate(
        origami=canon, pinching_word=word, quartic=report.quartic, witness=witness
    )


def certificate_from_json(obj):
    from .galois import ReciprocalQuartic

    origami = Origami.from_json(obj["origami"])
    word = Sl2zWord.parse(obj["pinching_word"])
    quartic = ReciprocalQuartic(a=obj["quartic"]["a"], b=obj["quartic"]["b"])
    for key, value in (
        ("delta1", quartic.delta1),
        ("delta2", quartic.delta2),
        ("delta3", quartic.delta3),
    ):
        if key in obj["quartic"] and obj["quartic"][key] != value:
            raise ValueError("certificate %s does not match (a, b)" % key)
    w = obj["witness"]
    if w["kind"] == "unipotent":
        witness = UnipotentWitness(
            word=Sl2zWord.parse(w["word"]),
            rank_b_minus_id=w["rank_b_minus_id"],
            isotropic=w["isotropic"],
        )
    elif w["kind"] == "cylinder":
        direction = Sl2zWord.parse(w["direction"]) if w["direction"] else Sl2zWord(())
        witness = CylinderWitness(direction=direction, dim_e=w["dim_e"], genus=w["genus"])
    else:
        raise ValueError("unknown witness kind %r" % w["kind"])
    return SimplicityCertificate(
        origami=origami, pinching_word=word, quartic=quartic, witness=witness
    )


def verify_certificate(cert):
    """Re-derive every claim in a certificate from scratch."""
    try:
        o = cert.origami
        _check_preconditions(o)
        canon = canonical_form(o).origami
        ctx = kz_context(canon)
        base = ctx.graph.basepoint
        zero, steps = _zero_context(ctx)

        def word_zero_matrix(word):
            node, mat = base, la.identity_matrix(len(zero[base]))
            for letter in reversed(word.letters):
                node, step = steps[(node, letter)]
                mat = la.mat_mul(step, mat)
            return node, mat

        node, mat = word_zero_matrix(cert.pinching_word)
        if node != base:
            return False
        report = is_galois_pinching_sp4(mat)
        if not report.pinching:
            return False
        if (report.quartic.a, report.quartic.b) != (cert.quartic.a, cert.quartic.b):
            return False
        for value, claimed in (
            (report.quartic.delta1, cert.quartic.delta1),
            (report.quartic.delta2, cert.quartic.delta2),
            (report.quartic.delta3, cert.quartic.delta3),
        ):
            if value != claimed:
                return False
        g = genus(canon)
        w = cert.witness
        if isinstance(w, CylinderWitness):
            if w.genus != g:
                return False
            dim_e = cylinder_span_dim(canon, w.direction if len(w.direction) else None)
            return dim_e == w.dim_e and 1 < dim_e < g
        if isinstance(w, UnipotentWitness):
            node, mat = word_zero_matrix(w.word)
            if node != base or la.mat_eq(mat, la.identity_matrix(len(mat))):
                return False
            form = _zero_form(ctx.homology(base), zero[base])
            rank, isotropic, lagrangian = _image_is_lagrangian(mat, form, g)
            if rank != w.rank_b_minus_id or isotropic != w.isotropic:
                return False
            return not lagrangian
        return False
    except (ValueError, AssertionError):
        return False
