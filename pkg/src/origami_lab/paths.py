r"""
Closed paths through square centers and their exact crossing combinatorics.

A CenterPath walks from square center to square center with steps R
(i -> h(i)), L (i -> h^-1(i)), U (i -> v(i)), D (i -> v^-1(i)).  Such
paths avoid the singular points, so winding indices and transverse
crossing counts are well defined once the strands are put in general
position.  The perturbation scheme is deterministic: every edge crossing
event gets a distinct coordinate along its edge, ordered by traversal
time (earlier events sit closer to the bottom / left end), and within
each square a traversal becomes a chord of the boundary circle
parametrized counterclockwise as bottom [0,1), right [1,2), top [2,3),
left [3,4).  Chords cross iff their endpoints interleave; the sign is the
orientation of the tangent frame at the crossing.

These paths also provide homology representatives: an R step at square i
contributes the bottom edge sigma_i, a U step the left edge zeta_i (and
L/D steps the corresponding negatives), via a homotopy pushing centers to
bottom-left corners.
"""

from __future__ import annotations

from dataclasses import dataclass

_DIRS = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}
_OPPOSITE = {"R": "L", "L": "R", "U": "D", "D": "U"}


@dataclass(frozen=True)
class CenterPath:
    start: int
    steps: str

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a center path needs at least one step")
        if any(s not in _DIRS for s in self.steps):
            raise ValueError("steps must be over R, L, U, D")


def step_square(o, square, step):
    if step == "R":
        return o.h(square)
    if step == "L":
        return o.h.inverse()(square)
    if step == "U":
        return o.v(square)
    if step == "D":
        return o.v.inverse()(square)
    raise ValueError("bad step %r" % step)


def follow(o, path):
    """Squares visited: list of length len(steps); entry j is the square
    the path occupies before step j.  Raises if the path is not closed."""
    squares = []
    s = path.start
    for st in path.steps:
        squares.append(s)
        s = step_square(o, s, st)
    if s != path.start:
        raise ValueError("path is not closed")
    return squares


def reduce_path(path):
    """Cancel adjacent inverse step pairs, cyclically, to a non-backtracking
    path.  Returns None if everything cancels."""
    steps = list(path.steps)
    changed = True
    while changed and steps:
        changed = False
        i = 0
        while i < len(steps) - 1:
            if steps[i + 1] == _OPPOSITE[steps[i]]:
                del steps[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        if len(steps) >= 2 and steps[0] == _OPPOSITE[steps[-1]]:
            del steps[-1]
            del steps[0]
            changed = True
    if not steps:
        return None
    return CenterPath(path.start, "".join(steps))


def path_class_chain(o, path):
    """Homology representative as an edge chain (length 2N)."""
    n = o.degree
    chain = [0] * (2 * n)
    squares = follow(o, path)
    for sq, st in zip(squares, path.steps):
        if st == "R":
            chain[sq - 1] += 1
        elif st == "L":
            chain[o.h.inverse()(sq) - 1] -= 1
        elif st == "U":
            chain[n + sq - 1] += 1
        else:  # D
            chain[n + o.v.inverse()(sq) - 1] -= 1
    return chain


def winding_index(o, path):
    """(left turns - right turns) / 4 over consecutive steps including the
    wrap-around; the division must be exact."""
    path = reduce_path(path)
    if path is None:
        raise ValueError("path reduces to nothing")
    follow(o, path)  # closure check
    total = 0
    steps = path.steps
    for s1, s2 in zip(steps, steps[1:] + steps[0]):
        d1, d2 = _DIRS[s1], _DIRS[s2]
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross == 0 and d1 != d2:
            raise ValueError("backtracking pair %s%s in a reduced path" % (s1, s2))
        total += cross
    if total % 4 != 0:
        raise ValueError("turn sum %d is not divisible by 4" % total)
    return total // 4


# ---------------------------------------------------------------------------
# Crossing engine


def _chords(o, paths):
    """All square traversals of the given paths as boundary-circle chords.

    Returns {square: [(entry coord, exit coord, path index)]}.  Circle
    coordinates: bottom side [0,1) left to right, right side [1,2) bottom
    to top, top side [2,3) right to left, left side [3,4) top to bottom.
    """
    hi = {}
    events = {}  # edge key -> list of (path index, step index)
    per_path = []
    for pi, path in enumerate(paths):
        squares = follow(o, path)
        per_path.append(squares)
        for j, (sq, st) in enumerate(zip(squares, path.steps)):
            if st == "R":
                key = ("zeta", o.h(sq))
            elif st == "L":
                key = ("zeta", sq)
            elif st == "U":
                key = ("sigma", o.v(sq))
            else:  # D
                key = ("sigma", sq)
            events.setdefault(key, []).append((pi, j))
    # distinct coordinates along each edge, earlier events nearer 0
    coord = {}
    for key, evs in events.items():
        evs.sort()
        for rank, ev in enumerate(evs):
            coord[(key, ev)] = (rank + 1) / (len(evs) + 1)
    chords = {}
    for pi, path in enumerate(paths):
        squares = per_path[pi]
        k = len(path.steps)
        for j in range(k):
            sq = squares[j]
            st_in = path.steps[(j - 1) % k]
            st_out = path.steps[j]
            ev_in = (pi, (j - 1) % k)
            ev_out = (pi, j)
            # entry point: where the previous step's edge event sits on the
            # boundary of this square
            if st_in == "R":  # entered through the left side
                y = coord[(("zeta", sq), ev_in)]
                a = 4 - y
            elif st_in == "L":  # entered through the right side
                y = coord[(("zeta", o.h(sq)), ev_in)]
                a = 1 + y
            elif st_in == "U":  # entered through the bottom
                x = coord[(("sigma", sq), ev_in)]
                a = x
            else:  # st_in == "D": entered through the top
                x = coord[(("sigma", o.v(sq)), ev_in)]
                a = 3 - x
            if st_out == "R":  # exits through the right side
                y = coord[(("zeta", o.h(sq)), ev_out)]
                b = 1 + y
            elif st_out == "L":
                y = coord[(("zeta", sq), ev_out)]
                b = 4 - y
            elif st_out == "U":  # exits through the top
                x = coord[(("sigma", o.v(sq)), ev_out)]
                b = 3 - x
            else:  # D: exits through the bottom
                x = coord[(("sigma", sq), ev_out)]
                b = x
            chords.setdefault(sq, []).append((a, b, pi))
    return chords


def _crossing_sign(a1, b1, a2, b2):
    def in_arc(x, start, end):
        if start < end:
            return start < x < end
        return x > start or x < end

    a2_in = in_arc(a2, a1, b1)
    b2_in = in_arc(b2, a1, b1)
    if a2_in and not b2_in:
        return 1
    if b2_in and not a2_in:
        return -1
    return 0


def signed_crossings(o, path_a, path_b):
    """Algebraic intersection number of two closed center paths."""
    chords = _chords(o, [path_a, path_b])
    total = 0
    for square_chords in chords.values():
        for a1, b1, p1 in square_chords:
            if p1 != 0:
                continue
            for a2, b2, p2 in square_chords:
                if p2 != 1:
                    continue
                total += _crossing_sign(a1, b1, a2, b2)
    return total


def self_crossings(o, path):
    """Number of transverse self-crossings of one closed center path under
    the deterministic perturbation."""
    chords = _chords(o, [path])
    total = 0
    for square_chords in chords.values():
        k = len(square_chords)
        for i in range(k):
            for j in range(i + 1, k):
                a1, b1, _ = square_chords[i]
                a2, b2, _ = square_chords[j]
                if _crossing_sign(a1, b1, a2, b2) != 0:
                    total += 1
    return total


# ---------------------------------------------------------------------------
# Generating families of loops


def cycle_loops(o):
    """Horizontal and vertical core loops: all-R loops around h-cycles and
    all-U loops around v-cycles, each starting at the cycle's minimal
    square."""
    loops = []
    for cyc in o.h.cycles(include_fixed=True):
        loops.append(CenterPath(min(cyc), "R" * len(cyc)))
    for cyc in o.v.cycles(include_fixed=True):
        loops.append(CenterPath(min(cyc), "U" * len(cyc)))
    return loops


def pattern_loops(o, pattern):
    """Loops following the cycles of the permutation obtained by chaining
    the steps of ``pattern``, one copy of the pattern per cycle element.
    ``pattern`` "RRU" uses cycles of v o h^2; "RU" gives staircases."""
    from .perm import compose, identity

    if not pattern or any(s not in _DIRS for s in pattern):
        raise ValueError("pattern must be a nonempty string over R, L, U, D")
    w = identity(o.degree)
    for st in pattern:
        if st == "R":
            w = compose(o.h, w)
        elif st == "L":
            w = compose(o.h.inverse(), w)
        elif st == "U":
            w = compose(o.v, w)
        else:
            w = compose(o.v.inverse(), w)
    loops = []
    for cyc in w.cycles(include_fixed=True):
        loops.append(CenterPath(min(cyc), pattern * len(cyc)))
    return loops


def _patterns(length):
    """Non-backtracking step patterns of the given length, normalized to
    start with R (rotation and reversal do not change the loop family up
    to sign) and to be primitive (no shorter repeating block)."""
    import itertools

    out = []
    for tail in itertools.product("RULD", repeat=length - 1):
        pat = "R" + "".join(tail)
        if any(b == _OPPOSITE[a] for a, b in zip(pat, pat[1:] + pat[0])):
            continue
        if any(
            length % d == 0 and pat == pat[:d] * (length // d)
            for d in range(1, length)
        ):
            continue
        out.append(pat)
    return out


def generating_loops(o, rank_fn, target_rank, max_pattern=8):
    """Grow a pool of loops (horizontal/vertical cycle loops, then loops
    along step patterns of increasing length: staircases "RU", "RRU", ...
    and mixed-direction patterns like "RURD") until ``rank_fn`` of their
    homology classes reaches ``target_rank``.

    ``rank_fn`` maps a list of edge chains to a rank (over Q or F2).
    Returns the pool of CenterPaths.  Raises if the rank stalls.
    """
    pool = cycle_loops(o)
    chains = [path_class_chain(o, p) for p in pool]
    if rank_fn(chains) >= target_rank:
        return pool
    for length in range(2, max_pattern + 1):
        for pat in _patterns(length):
            for loop in pattern_loops(o, pat):
                pool.append(loop)
                chains.append(path_class_chain(o, loop))
        if rank_fn(chains) >= target_rank:
            return pool
    raise AssertionError(
        "loop families do not span homology (rank %d < %d)"
        % (rank_fn(chains), target_rank)
    )
