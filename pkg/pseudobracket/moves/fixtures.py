"""
Diagram pairs differing by one R3, P2 or P3 move, and the braid
closures they are built from
"""
import os
import re
import json
import glob
from dataclasses import dataclass
import numpy as np
from pseudobracket.diagram import (PseudoDiagram, CrossingKind, AmbiguousOrientation,
                                   diagram_from_dict, relabel)
from .moves import MoveKind

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                           os.pardir, os.pardir, "fixtures", "moves")

_PSEUDO = re.compile(r"p(\d+)$")


def _generator(token):
    """
    Braid letter -> (strand position, kind, sign)
    i / -i: classical sigma_i and its inverse, 'p<i>': pseudo
    """
    if isinstance(token, str):
        match = _PSEUDO.match(token.strip().lower())
        if match is None:
            raise ValueError(f"Unknown braid letter {token!r}")
        return int(match.group(1)), CrossingKind.PSEUDO, 1
    if not isinstance(token, int) or token == 0:
        raise ValueError(f"Unknown braid letter {token!r}")
    return abs(token), CrossingKind.CLASSICAL, 1 if token > 0 else -1


def braid_closure(word, n_strands=None):
    """
    Diagram of the closure of a braid word, relabeled canonically.
    Strands that no letter touches close up as free loops. Words whose
    closure has a two-arc component that is never an under-strand, such as
    [1, -1], raise AmbiguousOrientation.
    """
    letters = [_generator(t) for t in word]
    needed = max((i + 1 for i, _, _ in letters), default=1)
    if n_strands is None:
        n_strands = needed
    if n_strands < needed:
        raise ValueError(f"Word needs {needed} strands, got {n_strands}")
    current = list(range(1, n_strands + 1))
    first = list(current)
    next_id = n_strands + 1
    successor = {}
    crossings = []
    for i, kind, sign in letters:
        x, y = current[i - 1], current[i]
        x_out, y_out = next_id, next_id + 1
        next_id += 2
        # Counterclockwise from the bottom right: SE, NE, NW, SW
        if sign > 0:
            crossings.append((kind, (y, x_out, y_out, x)))
        else:
            crossings.append((kind, (x, y, x_out, y_out)))
        successor[x] = x_out
        successor[y] = y_out
        current[i - 1], current[i] = y_out, x_out
    # Glue the top of every strand position to its bottom
    rename = {}
    for top, bottom in zip(current, first):
        if top == bottom:
            successor[bottom] = bottom
        else:
            rename[top] = bottom
    crossings = [(kind, tuple(rename.get(a, a) for a in arcs)) for kind, arcs in crossings]
    successor = {rename.get(a, a): rename.get(b, b) for a, b in successor.items()}
    try:
        D = PseudoDiagram(crossings, successor)
    except AmbiguousOrientation as e:
        raise AmbiguousOrientation(f"Closure of {list(word)} cannot be oriented: {e}")
    return relabel(D)


def random_braid_word(rng, n_strands, length, pseudo=0.0):
    """
    Random braid word, each letter pseudo with probability pseudo
    """
    word = []
    for _ in range(length):
        i = int(rng.integers(1, n_strands))
        if rng.random() < pseudo:
            word.append(f"p{i}")
        else:
            word.append(i if rng.random() < 0.5 else -i)
    return word


def random_braid_diagram(seed, max_crossings=8, pseudo=0.0, knot=False, max_tries=1000):
    """
    Seeded random closed braid with 1..max_crossings crossings.
    With knot=True only single component closures are returned.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        n_strands = int(rng.integers(2, 5))
        length = int(rng.integers(1, max_crossings + 1))
        word = random_braid_word(rng, n_strands, length, pseudo)
        try:
            D = braid_closure(word, n_strands)
        except AmbiguousOrientation:
            # Some two-arc component is never an under-strand
            continue
        if not knot or (D.n_components == 1 and not D.free_loops):
            return D
    raise ValueError(f"No knot closure found in {max_tries} tries (seed {seed})")


@dataclass(frozen=True)
class FixturePair:
    name: str
    move: MoveKind
    before: PseudoDiagram
    after: PseudoDiagram
    before_word: tuple
    after_word: tuple
    strands: int


def load_fixture_pairs(move, corpus=None):
    """
    Pairs of the given move from the JSON corpus, sorted by file name
    """
    corpus = corpus or FIXTURE_DIR
    pairs = []
    for path in sorted(glob.glob(os.path.join(corpus, "*.json"))):
        with open(path) as fh:
            data = json.load(fh)
        if MoveKind(data["move"]) is not move:
            continue
        pairs.append(FixturePair(name=os.path.splitext(os.path.basename(path))[0],
                                 move=move,
                                 before=diagram_from_dict(data["before"]),
                                 after=diagram_from_dict(data["after"]),
                                 before_word=tuple(data["before_word"]),
                                 after_word=tuple(data["after_word"]),
                                 strands=data["strands"]))
    return pairs


def r3_fixture_pairs(corpus=None):
    return load_fixture_pairs(MoveKind.R3, corpus)


def p2_fixture_pairs(corpus=None):
    return load_fixture_pairs(MoveKind.P2, corpus)


def p3_fixture_pairs(corpus=None):
    return load_fixture_pairs(MoveKind.P3, corpus)
