"""
Reidemeister and pseudo moves on PD diagrams

Insertions append their new crossings at the end of the crossing list
and keep the id of the piece of a split arc that comes first along
the orientation, so a removal restores the original diagram exactly.
"""
from enum import Enum
from dataclasses import dataclass
import numpy as np
from pseudobracket.diagram import PseudoDiagram, Crossing, CrossingKind


class UnknownArc(ValueError):
    pass


class NotSameFace(ValueError):
    pass


class NotAKink(ValueError):
    pass


class MoveKind(Enum):
    R1_POS = "r1+"
    R1_NEG = "r1-"
    P1 = "p1"
    R2 = "r2"
    R3 = "r3"
    P2 = "p2"
    P3 = "p3"


# Moves a walk can apply by local rewriting, the others are fixture pairs
WALK_MOVES = (MoveKind.R1_POS, MoveKind.R1_NEG, MoveKind.P1, MoveKind.R2)


def parse_moves(text):
    """
    'r1,r2,p1' -> set of MoveKind, r1 stands for both chiralities
    """
    moves = set()
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token == "r1":
            moves.update((MoveKind.R1_POS, MoveKind.R1_NEG))
            continue
        try:
            moves.add(MoveKind(token))
        except ValueError:
            known = ", ".join(["r1"] + [m.value for m in MoveKind])
            raise ValueError(f"Unknown move {token!r} (known moves: {known})")
    if not moves:
        raise ValueError("No moves given")
    return moves


def _check_arc(D, arc):
    if arc not in D.successor:
        raise UnknownArc(f"Arc {arc} is not in the diagram")


def _head_slot(D, arc):
    for c, s in D.endpoints.get(arc, ()):
        if D.heads[c][s]:
            return c, s
    return None


# Kink layouts as (x1, x2, loop) positions, x1 before the loop
_KINKS = {
    ("left", 1): ("x1", "x2", "l", "l"),
    ("left", -1): ("l", "x1", "x2", "l"),
    ("right", 1): ("l", "l", "x2", "x1"),
    ("right", -1): ("x1", "l", "l", "x2"),
}


def _insert_kink(D, arc, kind, chirality, side):
    _check_arc(D, arc)
    if side not in ("left", "right"):
        raise ValueError(f"Kink side must be 'left' or 'right', got {side!r}")
    loop = D.max_arc() + 1
    free = arc in D.free_loops
    after = arc if free else loop + 1
    crossings = [list(c.arcs) for c in D.crossings]
    kinds = [c.kind for c in D.crossings]
    head = _head_slot(D, arc)
    if head is not None:
        crossings[head[0]][head[1]] = after
    names = {"x1": arc, "x2": after, "l": loop}
    crossings.append([names[k] for k in _KINKS[(side, chirality)]])
    kinds.append(kind)
    successor = dict(D.successor)
    successor[arc] = loop
    successor[loop] = after
    if not free:
        successor[after] = D.successor[arc]
    return PseudoDiagram(zip(kinds, crossings), successor)


def r1_insert(D, arc, chirality=1, side="left"):
    """
    Split arc and add a classical kink of the given chirality (+1/-1)
    """
    if chirality not in (1, -1):
        raise ValueError(f"Chirality must be +1 or -1, got {chirality!r}")
    return _insert_kink(D, arc, CrossingKind.CLASSICAL, chirality, side)


def p1_insert(D, arc, side="left"):
    """
    Split arc and add a pseudo kink
    """
    return _insert_kink(D, arc, CrossingKind.PSEUDO, 1, side)


def kink_loop(D, i):
    """
    Arc forming a kink at crossing i (sitting in two adjacent slots), or None
    """
    arcs = D.crossings[i].arcs
    loops = [arcs[s] for s in range(4) if arcs[s] == arcs[(s + 1) % 4]]
    return max(loops) if loops else None


def _remove_kink(D, i, kind):
    if not 0 <= i < D.n_crossings:
        raise IndexError(f"Crossing index {i} out of range (diagram has {D.n_crossings})")
    if D.crossings[i].kind is not kind:
        raise NotAKink(f"Crossing {i} ({D.crossings[i]}) is not a {kind.name.lower()} crossing")
    loop = kink_loop(D, i)
    if loop is None:
        raise NotAKink(f"Crossing {i} ({D.crossings[i]}) is not a kink")
    before = next(a for a, b in D.successor.items() if b == loop)
    after = D.successor[loop]
    successor = {a: b for a, b in D.successor.items() if a not in (loop, after)}
    if before == after:
        successor[before] = before
    else:
        successor[before] = D.successor[after]
    crossings = []
    for c, crossing in enumerate(D.crossings):
        if c == i:
            continue
        arcs = tuple(before if a == after else a for a in crossing.arcs)
        crossings.append(Crossing(crossing.kind, arcs))
    return PseudoDiagram(crossings, successor)


def r1_remove(D, i):
    return _remove_kink(D, i, CrossingKind.CLASSICAL)


def p1_remove(D, i):
    return _remove_kink(D, i, CrossingKind.PSEUDO)


def kink_sites(D, kind):
    return [i for i, c in enumerate(D.crossings)
            if c.kind is kind and kink_loop(D, i) is not None]


def r2_sites(D):
    """
    (face index, arc1, arc2) for every pair of distinct arcs on a face
    """
    sites = []
    for f, face in enumerate(D.faces()):
        arcs = sorted(set(face.arcs))
        for k, a1 in enumerate(arcs):
            for a2 in arcs[k + 1:]:
                sites.append((f, a1, a2))
    return sites


def _face_dart(D, face, arc):
    for dart in face.darts:
        if D.crossings[dart[0]].arcs[dart[1]] == arc:
            return dart
    return None


def r2_insert(D, arc1, arc2, over="first", face=None):
    """
    Push a finger of arc1 across arc2 inside a face they share,
    adding two classical crossings of opposite sign. over picks the
    arc that passes over.
    """
    _check_arc(D, arc1)
    _check_arc(D, arc2)
    if over not in ("first", "second"):
        raise ValueError(f"over must be 'first' or 'second', got {over!r}")
    if arc1 == arc2:
        raise NotSameFace("A Reidemeister II move needs two distinct arcs")
    faces = D.faces()
    candidates = [faces[face]] if face is not None else faces
    site = None
    for f in candidates:
        d1, d2 = _face_dart(D, f, arc1), _face_dart(D, f, arc2)
        if d1 is not None and d2 is not None:
            site = (d1, d2)
            break
    if site is None:
        raise NotSameFace(f"Arcs {arc1} and {arc2} do not bound a common face")
    d1, d2 = site
    crossings = [list(c.arcs) for c in D.crossings]
    kinds = [c.kind for c in D.crossings]
    successor = dict(D.successor)
    next_id = D.max_arc() + 1
    pieces = []
    agrees = []
    for arc, dart in ((arc1, d1), (arc2, d2)):
        # The walk runs from the dart slot to the other end of the arc
        forward = not D.heads[dart[0]][dart[1]]
        ids = [next_id, next_id + 1]
        next_id += 2
        ordered = [arc] + ids
        walk = ordered if forward else ordered[::-1]
        successor[ordered[0]] = ordered[1]
        successor[ordered[1]] = ordered[2]
        successor[ordered[2]] = D.successor[arc]
        start = dart
        end = D.other_end(*dart)
        crossings[start[0]][start[1]] = walk[0]
        crossings[end[0]][end[1]] = walk[2]
        pieces.append(walk)
        agrees.append(forward)
    (e1a, e1b, e1c), (e2a, e2b, e2c) = pieces
    # Counterclockwise slots E, N, W, S
    right = [e2c, e1b, e2b, e1a]
    left = [e2b, e1b, e2a, e1c]
    # Incoming slots of the arc2 strand (E-W) and the arc1 strand (N-S)
    h_in = 2 if agrees[1] else 0
    v_in_right = 3 if agrees[0] else 1
    v_in_left = 1 if agrees[0] else 3
    for slots, v_in in ((right, v_in_right), (left, v_in_left)):
        under = h_in if over == "first" else v_in
        crossings.append(slots[under:] + slots[:under])
        kinds.append(CrossingKind.CLASSICAL)
    return PseudoDiagram(zip(kinds, crossings), successor)


@dataclass(frozen=True)
class MoveStep:
    step: int
    move: MoveKind
    site: tuple
    diagram: PseudoDiagram

    def describe(self):
        site = ",".join(str(s) for s in self.site)
        return f"{self.move.value}@{site}"


def _insert_sites(D, move):
    arcs = sorted(D.successor)
    if move in (MoveKind.R1_POS, MoveKind.R1_NEG, MoveKind.P1):
        return [(arc, side) for arc in arcs for side in ("left", "right")]
    if move is MoveKind.R2:
        return [(a1, a2, f, over) for f, a1, a2 in r2_sites(D)
                for over in ("first", "second")]
    return []


def _apply(D, move, site):
    if move is MoveKind.R1_POS:
        return r1_insert(D, site[0], 1, site[1])
    if move is MoveKind.R1_NEG:
        return r1_insert(D, site[0], -1, site[1])
    if move is MoveKind.P1:
        return p1_insert(D, site[0], site[1])
    if move is MoveKind.R2:
        a1, a2, f, over = site
        return r2_insert(D, a1, a2, over=over, face=f)
    raise ValueError(f"Move {move.value} has no rewriting rule")


def _removal_sites(D, move):
    if move in (MoveKind.R1_POS, MoveKind.R1_NEG):
        return [("remove", i) for i in kink_sites(D, CrossingKind.CLASSICAL)]
    if move is MoveKind.P1:
        return [("remove", i) for i in kink_sites(D, CrossingKind.PSEUDO)]
    return []


def iter_move_walk(D, seed, n_steps, allowed, removals=False):
    """
    Yield a MoveStep for each applied move of a seeded random walk.
    Steps without any applicable site are skipped.
    """
    rng = np.random.default_rng(seed)
    order = [m for m in MoveKind if m in set(allowed)]
    for step in range(n_steps):
        options = []
        for move in order:
            sites = _insert_sites(D, move)
            if removals:
                sites += _removal_sites(D, move)
            if sites:
                options.append((move, sites))
        if not options:
            continue
        # Pick the move first so R2 does not crowd out the kinks
        move, sites = options[int(rng.integers(len(options)))]
        site = sites[int(rng.integers(len(sites)))]
        if site[0] == "remove":
            remove = p1_remove if move is MoveKind.P1 else r1_remove
            D = remove(D, site[1])
        else:
            D = _apply(D, move, site)
        yield MoveStep(step, move, site, D)


def random_move_walk(D, seed, n_steps, allowed, removals=False):
    for move in iter_move_walk(D, seed, n_steps, allowed, removals):
        D = move.diagram
    return D
