import os
import sys
import time
import multiprocessing
from collections import Counter
from dataclasses import dataclass
import numpy as np
from pseudobracket.polynomial import (LaurentPoly, PseudoPoly, A, A_INV, V, H,
                                      LOOP_VALUE, lp_pow_writhe)
from pseudobracket.diagram import Smoothing, crossing_sign, writhe
from .states import count_loops, count_states

DEFAULT_STATE_LIMIT = 24


class TooLarge(ValueError):
    pass


def state_limit():
    """
    Crossing cap of the naive engine, PSEUDOBRACKET_STATE_LIMIT overrides
    """
    value = os.environ.get("PSEUDOBRACKET_STATE_LIMIT")
    if value is None:
        return DEFAULT_STATE_LIMIT
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"PSEUDOBRACKET_STATE_LIMIT must be an integer, got {value!r}")


@dataclass(frozen=True)
class SmoothingState:
    choices: tuple

    @classmethod
    def from_bits(cls, bits, n):
        """
        Bit k set means crossing k is smoothed horizontally
        """
        return cls(tuple(Smoothing.HORIZONTAL if (bits >> k) & 1 else Smoothing.VERTICAL
                         for k in range(n)))

    @classmethod
    def uniform(cls, smoothing, n):
        return cls((smoothing,) * n)

    def __len__(self):
        return len(self.choices)


@dataclass(frozen=True)
class StateWeight:
    classical: LaurentPoly
    pseudo: PseudoPoly
    loops: int

    def value(self):
        return self.pseudo.scale(self.classical) * LOOP_VALUE ** (self.loops - 1)


def crossing_weights(D, c):
    """
    (vertical, horizontal) weights of crossing c as PseudoPoly
    """
    if D.crossings[c].is_pseudo:
        return V, H
    if crossing_sign(D, c) > 0:
        return PseudoPoly.lift(A), PseudoPoly.lift(A_INV)
    return PseudoPoly.lift(A_INV), PseudoPoly.lift(A)


def _check_state(D, s):
    if len(s) != D.n_crossings:
        raise ValueError(f"State has {len(s)} choices for {D.n_crossings} crossings")


def _check_pinned(D, pinned):
    """
    Validated {crossing: Smoothing} map of crossings held at one smoothing
    """
    pinned = dict(pinned or {})
    for c, smoothing in pinned.items():
        if not 0 <= c < D.n_crossings:
            raise IndexError(f"Crossing index {c} out of range (diagram has {D.n_crossings})")
        if not isinstance(smoothing, Smoothing):
            raise ValueError(f"Crossing {c} pinned to {smoothing!r}, expected a Smoothing")
    return pinned


def smooth_and_count(D, s):
    """
    Closed curves left after smoothing every crossing as in s
    """
    _check_state(D, s)
    index = {arc: k for k, arc in enumerate(sorted(D.endpoints))}
    joins = []
    for c, smoothing in enumerate(s.choices):
        for x, y in D.smoothing_arcs(c, smoothing):
            joins.append((index[x], index[y]))
    return count_loops(len(index), joins) + len(D.free_loops)


def state_weight(D, s):
    _check_state(D, s)
    classical = LaurentPoly.constant(1)
    pseudo = PseudoPoly.lift(1)
    for c, smoothing in enumerate(s.choices):
        vertical, horizontal = crossing_weights(D, c)
        weight = vertical if smoothing is Smoothing.VERTICAL else horizontal
        if D.crossings[c].is_pseudo:
            pseudo = pseudo * weight
        else:
            classical = classical * weight.coefficient(0)
    return StateWeight(classical, pseudo, smooth_and_count(D, s))


def _naive_args(D, pinned):
    index = {arc: k for k, arc in enumerate(sorted(D.endpoints))}
    smoothings = []
    signs = []
    fixed = [(index[x], index[y]) for c in sorted(pinned)
             for x, y in D.smoothing_arcs(c, pinned[c])]
    for c, crossing in enumerate(D.crossings):
        if c in pinned:
            continue
        smoothings.append(tuple(
            tuple((index[x], index[y]) for x, y in D.smoothing_arcs(c, smoothing))
            for smoothing in (Smoothing.VERTICAL, Smoothing.HORIZONTAL)))
        signs.append(0 if crossing.is_pseudo else int(crossing_sign(D, c)))
    return {"n_arcs": len(index), "smoothings": smoothings, "signs": signs, "fixed": fixed}


def bracket_naive(D, limit=None, serial=True, nprocs=None, verbose=0, pinned=None):
    """
    Sum over all 2^n states of the classical factor times the
    pseudo factor times d^(loops - 1). Pinned crossings keep their
    given smoothing and weigh 1.
    """
    pinned = _check_pinned(D, pinned)
    if limit is None:
        limit = state_limit()
    n = D.n_crossings - len(pinned)
    if n > limit:
        raise TooLarge(f"{n} crossings exceed the naive engine limit of {limit}")
    if not D.successor:
        return PseudoPoly.lift(1)
    start = time.time()
    base = _naive_args(D, pinned)
    total = 2 ** n
    if serial or total < 1024:
        tally = count_states(dict(base, start=0, stop=total))
    else:
        nprocs = nprocs or multiprocessing.cpu_count()
        bounds = np.linspace(0, total, nprocs + 1, dtype=np.int64)
        calls = [dict(base, start=int(lo), stop=int(hi))
                 for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
        with multiprocessing.Pool(nprocs) as pool:
            tally = sum(pool.map(count_states, calls), Counter())
    free = len(D.free_loops)
    result = PseudoPoly()
    for (a_exp, n_vert, n_hori, loops), count in sorted(tally.items()):
        term = (V ** n_vert) * (H ** n_hori) * LaurentPoly({a_exp: count})
        result = result + term * LOOP_VALUE ** (loops + free - 1)
    if verbose > 0:
        print(f"Time to expand {total} states: {np.around(time.time() - start, 2)}",
              file=sys.stderr)
    return result


def contraction_order(D):
    """
    Greedy order keeping the number of half-processed arcs small
    """
    remaining = set(range(D.n_crossings))
    done = Counter()
    boundary = 0
    order = []
    while remaining:
        best = None
        for c in sorted(remaining):
            local = Counter(D.crossings[c].arcs)
            size = boundary
            for arc, k in local.items():
                before = done[arc]
                after = before + k
                size += (after == 1) - (before == 1)
            if best is None or size < best[0]:
                best = (size, c)
        boundary, c = best
        for arc in D.crossings[c].arcs:
            done[arc] += 1
        remaining.remove(c)
        order.append(c)
    return order


def _join(mates, x, y):
    """
    Connect the ends of arcs x and y at the current crossing
    Returns the number of closed curves this creates
    """
    if x == y:
        return 1
    if mates.get(x) == y:
        del mates[x]
        del mates[y]
        return 1
    far_x = mates.pop(x, x)
    far_y = mates.pop(y, y)
    mates[far_x] = far_y
    mates[far_y] = far_x
    return 0


def bracket_contract(D, verbose=0, pinned=None):
    """
    Tangle contraction: crossings are absorbed one at a time while a
    map from boundary connectivity to partial sums is kept. Pinned
    crossings keep their given smoothing and weigh 1.
    """
    pinned = _check_pinned(D, pinned)
    if not D.successor:
        return PseudoPoly.lift(1)
    free = len(D.free_loops)
    if not D.crossings:
        return PseudoPoly.lift(LOOP_VALUE ** (free - 1))
    start = time.time()
    partials = {(): PseudoPoly.lift(1)}
    peak = 1
    loop_powers = [PseudoPoly.lift(LOOP_VALUE ** k) for k in range(3)]
    for c in contraction_order(D):
        if c in pinned:
            options = [(loop_powers[0], D.smoothing_arcs(c, pinned[c]))]
        else:
            weights = crossing_weights(D, c)
            options = [(weights[k], D.smoothing_arcs(c, smoothing))
                       for k, smoothing in enumerate((Smoothing.VERTICAL, Smoothing.HORIZONTAL))]
        merged = {}
        for key, value in partials.items():
            for weight, pairs in options:
                mates = dict(key)
                loops = 0
                for x, y in pairs:
                    loops += _join(mates, x, y)
                new_key = tuple(sorted(mates.items()))
                term = value * weight * loop_powers[loops]
                merged[new_key] = merged[new_key] + term if new_key in merged else term
        partials = merged
        peak = max(peak, len(partials))
    assert list(partials) == [()]
    result = partials[()].exact_divide(LOOP_VALUE)
    if free:
        result = result * LOOP_VALUE ** free
    if verbose > 0:
        print(f"Time to contract {D.n_crossings} crossings "
              f"(peak {peak} boundary states): {np.around(time.time() - start, 2)}",
              file=sys.stderr)
    return result


ENGINES = {"contract": bracket_contract,
           "naive": bracket_naive}


def bracket(D, engine="contract", **kwargs):
    try:
        compute = ENGINES[engine]
    except KeyError:
        raise ValueError(f"Unknown engine {engine!r} (expected one of {sorted(ENGINES)})")
    return compute(D, **kwargs)


def normalized_bracket(D, engine="contract", **kwargs):
    """
    (-A^-3)^w(D) <D>
    """
    return bracket(D, engine, **kwargs).scale(lp_pow_writhe(writhe(D)))


def smoothed_bracket(D, i, smoothing, engine="contract", **kwargs):
    """
    State sum of D with crossing i held at one smoothing, i.e. <K_V>
    or <K_H> taken in the orientation of D
    """
    return bracket(D, engine, pinned={i: smoothing}, **kwargs)
