r"""
Lyapunov exponent data for origamis: the exact sum formula and a Monte
Carlo estimator for random products of cocycle matrices.

The sum of the non-negative homology exponents of a reduced origami is

    (1/12) * sum k(k+2)/(k+1)   +   (1/|orbit|) * sum 1/len(c)

where the first sum runs over the zero orders of the stratum and the
second over all horizontal cycles c of all origamis in the SL(2,Z)
orbit.  The evaluation is exact rational arithmetic.

The Monte Carlo estimator runs a uniform random walk over the four
generator letters, accumulates the corresponding cocycle matrices
restricted to a chosen subspace (full homology, the zero-holonomy part,
or the (-1)-isotypical part W of a central involution), and extracts
exponents by periodic QR re-orthonormalization.  The walk law is not the
harmonic measure of the Teichmueller flow, so only law-independent
conclusions (zero blocks, symmetry of the spectrum) should be drawn.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import intlinalg as la
from .homology import isotypical_W, kz_context, restrict, tautological_split
from .origami import automorphisms, is_reduced, stratum

_LETTERS = ("T", "S", "t", "s")
_QR_PERIOD = 20


@dataclass(frozen=True)
class EkzReport:
    stratum: str
    combinatorial: Fraction
    cylinder: Fraction
    total: Fraction
    orbit_size: int

    def to_json(self):
        def frac(x):
            return {"num": x.numerator, "den": x.denominator}

        return {
            "stratum": self.stratum,
            "combinatorial": frac(self.combinatorial),
            "cylinder": frac(self.cylinder),
            "total": frac(self.total),
            "orbit": self.orbit_size,
        }


def combinatorial_term(st):
    """(1/12) sum k(k+2)/(k+1) over the zero orders of a stratum."""
    return Fraction(1, 12) * sum(
        (Fraction(k * (k + 2), k + 1) for k in st.orders), Fraction(0)
    )


def ekz_sum(o):
    """Exact sum of the non-negative homology Lyapunov exponents."""
    if not is_reduced(o):
        raise ValueError("the sum formula requires a reduced origami")
    st = stratum(o)
    comb = combinatorial_term(st)
    ctx = kz_context(o)
    cyl = Fraction(0)
    for node in ctx.graph.nodes:
        for cyc in node.h.cycles(include_fixed=True):
            cyl += Fraction(1, len(cyc))
    orbit_size = len(ctx.graph.nodes)
    cyl = cyl / orbit_size
    total = comb + cyl
    if total < 1:
        raise AssertionError("exponent sum below the tautological contribution")
    return EkzReport(
        stratum=str(st),
        combinatorial=comb,
        cylinder=cyl,
        total=total,
        orbit_size=orbit_size,
    )


# ---------------------------------------------------------------------------
# Monte Carlo estimation


@dataclass
class McEstimate:
    estimates: list  # sorted descending, mean over trials
    std_errors: list
    steps: int
    trials: int
    seed: int
    subspace: str
    ambiguity_note: str = ""

    def to_json(self):
        return {
            "estimates": self.estimates,
            "std_errors": self.std_errors,
            "steps": self.steps,
            "trials": self.trials,
            "seed": self.seed,
            "subspace": self.subspace,
            "ambiguity_note": self.ambiguity_note,
        }


def _central_involution(o):
    """A deterministic choice of central involution among the deck
    transformations (smallest image table wins)."""
    auts = automorphisms(o)
    candidates = []
    for tau in auts:
        if tau.is_identity() or not (tau * tau).is_identity():
            continue
        if all((tau * other).images == (other * tau).images for other in auts):
            candidates.append(tau)
    if not candidates:
        raise ValueError("no central involution among the automorphisms")
    return min(candidates, key=lambda t: t.images)


def _subspace_steps(ctx, subspace):
    """Per-(node, letter) step matrices restricted to the chosen
    subspace, as numpy float arrays, plus the subspace dimension."""
    nodes = range(len(ctx.graph.nodes))
    if subspace == "full":
        bases = {n: None for n in nodes}
    elif subspace == "H1_zero":
        bases = {}
        for n in nodes:
            _st, zero = tautological_split(ctx.homology(n))
            bases[n] = zero
    elif subspace == "W":
        bases = {}
        for n in nodes:
            o = ctx.graph.nodes[n]
            tau = _central_involution(o)
            bases[n] = isotypical_W(ctx.homology(n), tau)
    else:
        raise ValueError("subspace must be one of: full, H1_zero, W")
    steps = {}
    dim = None
    for n in nodes:
        for letter in _LETTERS:
            target, m = ctx.step(n, letter)
            if bases[n] is None:
                r = [list(row) for row in m]
            else:
                r = restrict(m, bases[n], bases[target])
            if dim is None:
                dim = len(r)
            steps[(n, letter)] = (target, np.array(r, dtype=float))
    return steps, dim


def mc_exponents(o, subspace="full", steps=10000, trials=10, seed=None):
    """Monte Carlo Lyapunov exponents of the uniform generator walk.

    Deterministic given (seed, steps, trials).  Estimates are sorted in
    decreasing order with standard errors across trials.
    """
    if seed is None:
        raise ValueError("a seed is required for reproducible estimates")
    if not is_reduced(o):
        raise ValueError("the random walk estimator requires a reduced origami")
    ctx = kz_context(o)
    step_mats, dim = _subspace_steps(ctx, subspace)
    note = ""
    if len(automorphisms(ctx.graph.nodes[ctx.graph.basepoint])) > 1:
        note = (
            "nontrivial deck transformations: cocycle matrices are only "
            "defined up to the automorphism action"
        )
    per_trial = []
    for trial in range(trials):
        rng = random.Random((int(seed) << 32) ^ trial)
        node = ctx.graph.basepoint
        q = np.eye(dim)
        sums = np.zeros(dim)
        for step_index in range(1, steps + 1):
            letter = _LETTERS[rng.randrange(4)]
            node, m = step_mats[(node, letter)]
            q = m @ q
            if step_index % _QR_PERIOD == 0 or step_index == steps:
                q, r = np.linalg.qr(q)
                diag = np.abs(np.diag(r))
                diag[diag == 0] = np.finfo(float).tiny
                sums += np.log(diag)
                signs = np.sign(np.diag(r))
                signs[signs == 0] = 1.0
                q = q * signs
        per_trial.append(sums / steps)
    data = np.array(per_trial)
    means = data.mean(axis=0)
    order = np.argsort(-means)
    means = means[order]
    if trials > 1:
        errs = data.std(axis=0, ddof=1)[order] / math.sqrt(trials)
    else:
        errs = np.zeros(dim)
    return McEstimate(
        estimates=[float(x) for x in means],
        std_errors=[float(x) for x in errs],
        steps=steps,
        trials=trials,
        seed=seed,
        subspace=subspace,
        ambiguity_note=note,
    )


def w_exponent_from_sum(report, multiplicity=4):
    """Solve total = 7/3 + multiplicity * lambda for the genus 11
    quaternionic cover, under the stated multiplicity assumption for the
    12-dimensional faithful isotypical block."""
    return (report.total - Fraction(7, 3)) / multiplicity
