"""
Oriented pseudo link diagrams as extended PD codes

A crossing lists its four arcs counterclockwise. Classical crossings
start at the incoming under-arc; pseudo crossings may start anywhere
since they have no over/under information.
"""
import os
import re
import ast
import json
from enum import Enum, IntEnum
from dataclasses import dataclass, replace


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


class AmbiguousOrientation(ValidationError):
    pass


class NotClassical(ValueError):
    pass


class CrossingKind(Enum):
    CLASSICAL = "X"
    PSEUDO = "P"


class CrossingSign(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1


class Smoothing(Enum):
    VERTICAL = "V"
    HORIZONTAL = "H"


@dataclass(frozen=True)
class Crossing:
    kind: CrossingKind
    arcs: tuple

    @property
    def is_pseudo(self):
        return self.kind is CrossingKind.PSEUDO

    def rotated(self, k):
        """
        Same crossing listed from slot k
        """
        k %= 4
        return replace(self, arcs=self.arcs[k:] + self.arcs[:k])

    def __str__(self):
        return f"{self.kind.value}({','.join(str(a) for a in self.arcs)})"


@dataclass(frozen=True)
class Face:
    # (crossing, slot) darts in boundary order, empty for free loop faces
    darts: tuple
    arcs: tuple


class PseudoDiagram(object):
    """
    Validated oriented diagram: crossings over arc ids plus the map
    sending each arc to the next arc along its component. Arcs that
    touch no crossing are free loops (successor maps them to themselves).
    """

    def __init__(self, crossings, successor):
        self.crossings = tuple(self._as_crossing(c) for c in crossings)
        self.successor = {int(k): int(v) for k, v in dict(successor).items()}
        self._faces = None
        self._validate()

    @staticmethod
    def _as_crossing(crossing):
        if isinstance(crossing, Crossing):
            arcs = tuple(int(a) for a in crossing.arcs)
            return Crossing(crossing.kind, arcs)
        kind, arcs = crossing
        return Crossing(CrossingKind(kind), tuple(int(a) for a in arcs))

    def _validate(self):
        succ = self.successor
        if sorted(succ.values()) != sorted(succ):
            raise ValidationError("Successor map is not a permutation of the arcs")
        self.endpoints = {}
        for c, crossing in enumerate(self.crossings):
            if len(crossing.arcs) != 4:
                raise ValidationError(f"Crossing {c} does not have four arcs")
            for s, arc in enumerate(crossing.arcs):
                self.endpoints.setdefault(arc, []).append((c, s))
        for arc, ends in self.endpoints.items():
            if arc not in succ:
                raise ValidationError(f"Arc {arc} is missing from the successor map")
            if len(ends) != 2:
                raise ValidationError(f"Arc {arc} appears {len(ends)} times (expected 2)")
        self.free_loops = tuple(sorted(a for a in succ if a not in self.endpoints))
        for arc in self.free_loops:
            if succ[arc] != arc:
                raise ValidationError(f"Arc {arc} touches no crossing but is not a closed loop")
        self.heads = self._resolve_orientation()
        self.components = self._find_components()
        self.n_components = len(self.components)
        self._check_euler()

    def _resolve_orientation(self):
        """
        Decide for every slot whether its arc ends there (head)
        Each arc has one head and one tail, each strand through a
        crossing enters once and leaves once
        """
        succ = self.successor
        heads = [[None] * 4 for _ in self.crossings]
        for c, crossing in enumerate(self.crossings):
            for s in (0, 1):
                x, y = crossing.arcs[s], crossing.arcs[s + 2]
                forward = succ[x] == y
                backward = succ[y] == x
                if not (forward or backward):
                    raise ValidationError(
                        f"Crossing {c} ({crossing}): arcs {x} and {y} are not consecutive")
                if s == 0 and not crossing.is_pseudo:
                    if not forward:
                        raise ValidationError(
                            f"Crossing {c} ({crossing}): under-strand must run {x} -> {y}")
                    heads[c][0], heads[c][2] = True, False
                elif forward != backward:
                    heads[c][s], heads[c][s + 2] = forward, backward
        pairs = [tuple(ends) for ends in self.endpoints.values()]
        pairs += [((c, s), (c, s + 2))
                  for c in range(len(self.crossings)) for s in (0, 1)]
        component_of = {arc: k for k, cycle in enumerate(self._find_components())
                        for arc in cycle}
        while True:
            self._propagate_heads(heads, pairs)
            pending = [(c, s) for c, flags in enumerate(heads)
                       for s in range(4) if flags[s] is None]
            if not pending:
                break
            # Only 1- and 2-arc components through pseudo crossings get here,
            # their direction is free unless they meet another component
            c, s = pending[0]
            own = component_of[self.crossings[c].arcs[s]]
            touched = {pc for pc, ps in pending
                       if component_of[self.crossings[pc].arcs[ps]] == own}
            for tc in sorted(touched):
                if any(component_of[a] != own for a in self.crossings[tc].arcs):
                    raise AmbiguousOrientation(
                        f"Cannot orient crossing {tc} ({self.crossings[tc]})")
            heads[c][s] = True
        for c, flags in enumerate(heads):
            arcs = self.crossings[c].arcs
            for s in (0, 1):
                i, o = (s, s + 2) if flags[s] else (s + 2, s)
                if succ[arcs[i]] != arcs[o]:
                    raise ValidationError(
                        f"Crossing {c}: successor of arc {arcs[i]} is not {arcs[o]}")
        return tuple(tuple(flags) for flags in heads)

    @staticmethod
    def _propagate_heads(heads, pairs):
        # The two ends of an arc, and the two ends of a strand, differ
        changed = True
        while changed:
            changed = False
            for (c1, s1), (c2, s2) in pairs:
                h1, h2 = heads[c1][s1], heads[c2][s2]
                if h1 is not None and h1 == h2:
                    raise ValidationError(
                        f"Inconsistent orientation between crossings {c1} and {c2}")
                if h1 is not None and h2 is None:
                    heads[c2][s2] = not h1
                    changed = True
                elif h2 is not None and h1 is None:
                    heads[c1][s1] = not h2
                    changed = True

    def _find_components(self):
        seen = set()
        components = []
        for start in sorted(self.successor):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            arc = self.successor[start]
            while arc != start:
                cycle.append(arc)
                seen.add(arc)
                arc = self.successor[arc]
            components.append(tuple(cycle))
        return components

    def _check_euler(self):
        # Connected pieces of the 4-valent graph, by crossing
        parent = list(range(len(self.crossings)))

        def root(c):
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        for (c1, _), (c2, _) in self.endpoints.values():
            parent[root(c1)] = root(c2)
        vertices = {}
        for c in range(len(self.crossings)):
            vertices[root(c)] = vertices.get(root(c), 0) + 1
        faces = {}
        for face in self.faces():
            if face.darts:
                r = root(face.darts[0][0])
                faces[r] = faces.get(r, 0) + 1
        for r, nv in vertices.items():
            # V - E + F = 2 with E = 2V
            if faces.get(r, 0) != nv + 2:
                raise ValidationError(
                    f"Diagram is not planar: {nv} crossings bound "
                    f"{faces.get(r, 0)} faces (expected {nv + 2})")

    def other_end(self, c, s):
        """
        The other endpoint of the arc sitting at slot s of crossing c
        """
        first, second = self.endpoints[self.crossings[c].arcs[s]]
        return second if first == (c, s) else first

    def faces(self):
        """
        Faces of the plane graph, traced with the face on the right
        of each dart. Free loops bound two faces each.
        """
        if self._faces is not None:
            return list(self._faces)
        faces = []
        seen = set()
        for c in range(len(self.crossings)):
            for s in range(4):
                if (c, s) in seen:
                    continue
                darts = []
                dart = (c, s)
                while dart not in seen:
                    seen.add(dart)
                    darts.append(dart)
                    end_c, end_s = self.other_end(*dart)
                    dart = (end_c, (end_s + 1) % 4)
                arcs = tuple(self.crossings[dc].arcs[ds] for dc, ds in darts)
                faces.append(Face(tuple(darts), arcs))
        for arc in self.free_loops:
            faces.append(Face((), (arc,)))
            faces.append(Face((), (arc,)))
        self._faces = tuple(faces)
        return faces

    def smoothing_slots(self, c, smoothing):
        """
        Slot pairs joined by a smoothing of crossing c. Vertical is
        the smoothing compatible with the orientation.
        """
        flags = self.heads[c]
        vertical = ((0, 1), (2, 3)) if flags[0] != flags[1] else ((0, 3), (1, 2))
        if smoothing is Smoothing.VERTICAL:
            return vertical
        return ((0, 3), (1, 2)) if vertical == ((0, 1), (2, 3)) else ((0, 1), (2, 3))

    def smoothing_arcs(self, c, smoothing):
        arcs = self.crossings[c].arcs
        return tuple((arcs[p], arcs[q]) for p, q in self.smoothing_slots(c, smoothing))

    @property
    def n_crossings(self):
        return len(self.crossings)

    @property
    def n_pseudo(self):
        return sum(1 for c in self.crossings if c.is_pseudo)

    def max_arc(self):
        return max(self.successor, default=0)

    def __eq__(self, other):
        if not isinstance(other, PseudoDiagram):
            return NotImplemented
        return (self.crossings == other.crossings
                and self.successor == other.successor)

    def __hash__(self):
        return hash((self.crossings, frozenset(self.successor.items())))

    def __repr__(self):
        terms = " ".join(str(c) for c in self.crossings)
        return f"PseudoDiagram({terms!r}, components={self.n_components})"


def _classical(D, i):
    if not 0 <= i < D.n_crossings:
        raise IndexError(f"Crossing index {i} out of range (diagram has {D.n_crossings})")
    crossing = D.crossings[i]
    if crossing.is_pseudo:
        raise NotClassical(f"Crossing {i} ({crossing}) is a pseudo crossing")
    return crossing


def crossing_sign(D, i):
    """
    +1 when the over-strand enters at d, -1 when it enters at b
    """
    _classical(D, i)
    return CrossingSign.POSITIVE if D.heads[i][3] else CrossingSign.NEGATIVE


def writhe(D):
    return sum(int(crossing_sign(D, i))
               for i, c in enumerate(D.crossings) if not c.is_pseudo)


def _with_crossing(D, i, crossing):
    crossings = list(D.crossings)
    crossings[i] = crossing
    return PseudoDiagram(crossings, D.successor)


def make_pseudo(D, i):
    crossing = _classical(D, i)
    return _with_crossing(D, i, replace(crossing, kind=CrossingKind.PSEUDO))


def switch_crossing(D, i):
    """
    Exchange over and under at crossing i. The tuple is rotated so
    the old incoming over-arc becomes the incoming under-arc.
    """
    crossing = _classical(D, i)
    shift = 3 if crossing_sign(D, i) == CrossingSign.POSITIVE else 1
    return _with_crossing(D, i, crossing.rotated(shift))


def mirror_diagram(D):
    crossings = [c if c.is_pseudo else c.rotated(3 if D.heads[i][3] else 1)
                 for i, c in enumerate(D.crossings)]
    return PseudoDiagram(crossings, D.successor)


def relabel(D):
    """
    Renumber arcs 1..m: components ordered by smallest arc id,
    each numbered consecutively along its orientation
    """
    mapping = {}
    for component in D.components:
        for arc in component:
            mapping[arc] = len(mapping) + 1
    crossings = [Crossing(c.kind, tuple(mapping[a] for a in c.arcs))
                 for c in D.crossings]
    successor = {mapping[k]: mapping[v] for k, v in D.successor.items()}
    return PseudoDiagram(crossings, successor)


def smooth_crossing(D, i, smoothing):
    """
    Replace crossing i by one of its smoothings and return the
    relabeled diagram. The vertical smoothing preserves the orientation
    of every remaining arc; the horizontal one reverses a side, which
    changes the oriented smoothings of pseudo crossings met by one
    reversed strand. bracket.smoothed_bracket gives the state sum in
    the orientation of D instead.

    Raises AmbiguousOrientation when the result has a two-arc component
    whose direction its successor map cannot record.
    """
    if not 0 <= i < D.n_crossings:
        raise IndexError(f"Crossing index {i} out of range (diagram has {D.n_crossings})")
    removed = D.crossings[i]
    partner = {}
    for p, q in D.smoothing_slots(i, smoothing):
        partner[p], partner[q] = q, p
    used = set()

    def far_end(c, s):
        # Follow the arc leaving (c, s) through crossing i to a kept slot
        while True:
            used.add(D.crossings[c].arcs[s])
            c, s = D.other_end(c, s)
            if c != i:
                return c, s
            s = partner[s]
            c = i

    kept = [c for c in range(D.n_crossings) if c != i]
    new_arcs = {c: [None] * 4 for c in kept}
    new_heads = {c: [None] * 4 for c in kept}
    successor = {}
    next_id = 1
    # Start at tails so vertical smoothings keep the orientation
    starts = [(c, s) for c in kept for s in range(4) if not D.heads[c][s]]
    starts += [(c, s) for c in kept for s in range(4) if D.heads[c][s]]
    for start in starts:
        if new_arcs[start[0]][start[1]] is not None:
            continue
        first = next_id
        previous = None
        slot = start
        while True:
            arc = next_id
            next_id += 1
            if previous is not None:
                successor[previous] = arc
            new_arcs[slot[0]][slot[1]] = arc
            new_heads[slot[0]][slot[1]] = False
            end = far_end(*slot)
            new_arcs[end[0]][end[1]] = arc
            new_heads[end[0]][end[1]] = True
            previous = arc
            slot = (end[0], (end[1] + 2) % 4)
            if slot == start:
                break
        successor[previous] = first
    # Closed curves made only of arcs at crossing i
    for t in range(4):
        if removed.arcs[t] in used:
            continue
        s = t
        while removed.arcs[s] not in used:
            used.add(removed.arcs[s])
            s = partner[D.other_end(i, s)[1]]
        successor[next_id] = next_id
        next_id += 1
    for _ in D.free_loops:
        successor[next_id] = next_id
        next_id += 1
    crossings = []
    for c in kept:
        arcs = tuple(new_arcs[c])
        crossing = Crossing(D.crossings[c].kind, arcs)
        if not crossing.is_pseudo and not new_heads[c][0]:
            crossing = crossing.rotated(2)
        crossings.append(crossing)
    return relabel(PseudoDiagram(crossings, successor))


_TERM = re.compile(r"([XP])\(([^()]*)\)")


def _parse_arcs(body, where):
    parts = [p.strip() for p in body.split(",")]
    if len(parts) != 4 or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise ParseError(f"Malformed crossing {where}: expected four arc numbers")
    return tuple(int(p) for p in parts)


def parse_pd_text(text):
    """
    Parse whitespace separated X(a,b,c,d) and P(a,b,c,d) terms of a
    knot diagram with arcs numbered 1..2n along the orientation
    """
    lines = [line.split("#", 1)[0] for line in text.splitlines()]
    body = " ".join(lines)
    crossings = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos == len(body):
            break
        match = _TERM.match(body, pos)
        if match is None:
            token = body[pos:].split()[0]
            raise ParseError(f"Malformed term {token!r} at column {pos + 1}")
        crossings.append((match.group(1), _parse_arcs(match.group(2), match.group(0))))
        pos = match.end()
    if not crossings:
        return PseudoDiagram([], {1: 1})
    n_arcs = 2 * len(crossings)
    arcs = {a for _, quad in crossings for a in quad}
    if arcs != set(range(1, n_arcs + 1)):
        raise ValidationError(f"Arcs must be numbered 1..{n_arcs} for {len(crossings)} crossings")
    successor = {x: x % n_arcs + 1 for x in range(1, n_arcs + 1)}
    return PseudoDiagram(crossings, successor)


def parse_pd_json(text):
    """
    Parse {"crossings": [{"kind": "X", "arcs": [...]}, ...],
           "successor": {"1": 2, ...}}
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}")
    return diagram_from_dict(data)


def diagram_from_dict(data):
    if not isinstance(data, dict) or "crossings" not in data or "successor" not in data:
        raise ParseError("Expected an object with 'crossings' and 'successor'")
    crossings = []
    for k, entry in enumerate(data["crossings"]):
        try:
            kind = CrossingKind(entry["kind"])
            arcs = entry["arcs"]
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"Malformed crossing entry {k}: {entry!r}")
        if (not isinstance(arcs, list) or len(arcs) != 4
                or not all(isinstance(a, int) and not isinstance(a, bool) for a in arcs)):
            raise ParseError(f"Crossing entry {k} needs four integer arcs")
        crossings.append(Crossing(kind, tuple(arcs)))
    if not isinstance(data["successor"], dict):
        raise ParseError("'successor' must be an object")
    try:
        successor = {int(k): int(v) for k, v in data["successor"].items()}
    except (TypeError, ValueError):
        raise ParseError("Successor keys and values must be integers")
    return PseudoDiagram(crossings, successor)


def diagram_to_dict(D):
    return {"crossings": [{"kind": c.kind.value, "arcs": list(c.arcs)}
                          for c in D.crossings],
            "successor": {str(k): D.successor[k] for k in sorted(D.successor)}}


def render_pd_json(D):
    return json.dumps(diagram_to_dict(D))


def is_sequential(D):
    n_arcs = len(D.successor)
    return (D.n_components == 1
            and set(D.successor) == set(range(1, n_arcs + 1))
            and all(D.successor[x] == x % n_arcs + 1 for x in D.successor))


def render_pd_text(D):
    """
    Text PD of a knot diagram, relabeled first when the arcs are not
    numbered 1..2n along the orientation
    """
    if D.n_components != 1:
        raise ValidationError("The text PD format only holds knot diagrams")
    if not is_sequential(D):
        D = relabel(D)
    return " ".join(str(c) for c in D.crossings)


def knotinfo_pd_to_text(notation):
    """
    Convert KnotInfo 'PD Notation' (PD[X[1,4,2,5],...],
    [[1,4,2,5],...] or [[1,4,2,5];...]) to the text format
    """
    cleaned = notation.strip().replace(";", ",")
    if cleaned.startswith("PD"):
        cleaned = cleaned[2:]
    cleaned = cleaned.replace("X[", "[")
    try:
        quads = ast.literal_eval(cleaned)
    except (ValueError, SyntaxError):
        raise ParseError(f"Malformed PD notation {notation!r}")
    if not isinstance(quads, (list, tuple)):
        raise ParseError(f"Malformed PD notation {notation!r}")
    terms = []
    for quad in quads:
        if (not isinstance(quad, (list, tuple)) or len(quad) != 4
                or not all(isinstance(a, int) for a in quad)):
            raise ParseError(f"Malformed crossing {quad!r} in PD notation")
        terms.append("X(" + ",".join(str(a) for a in quad) + ")")
    return " ".join(terms)


def load_diagram(path):
    """
    Read a diagram file, the format is picked from the extension
    """
    ext = os.path.splitext(path)[1].lower()
    with open(path) as fh:
        text = fh.read()
    if ext == ".pd":
        return parse_pd_text(text)
    if ext == ".json":
        return parse_pd_json(text)
    raise ParseError(f"Unknown diagram format {ext!r} (expected .pd or .json)")
