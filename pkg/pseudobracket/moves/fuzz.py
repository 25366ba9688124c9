import sys
import time
from dataclasses import dataclass, field
import numpy as np
from tqdm import tqdm
from pseudobracket.diagram import writhe
from pseudobracket.bracket import bracket
from pseudobracket.polynomial import lp_pow_writhe
from .moves import MoveKind, iter_move_walk

R1_MOVES = (MoveKind.R1_POS, MoveKind.R1_NEG)


@dataclass
class FuzzResult:
    seed: int
    steps: int
    moves: tuple
    applied: list = field(default_factory=list)
    violation: dict = None
    final_crossings: int = 0

    @property
    def passed(self):
        return self.violation is None

    def to_dict(self):
        return {"status": "PASS" if self.passed else "FAIL",
                "seed": self.seed,
                "steps": self.steps,
                "moves": [m.value for m in self.moves],
                "applied": self.applied,
                "final_crossings": self.final_crossings,
                "violation": self.violation}

    def render(self):
        if self.passed:
            return (f"PASS: {len(self.applied)} moves applied in {self.steps} steps "
                    f"(seed {self.seed}, {self.final_crossings} crossings at the end)")
        v = self.violation
        return (f"FAIL at step {v['step']} ({v['move']}): {v['check']}\n"
                f"  expected {v['expected']}\n"
                f"  got      {v['got']}")


class MoveFuzzer(object):
    """
    Random move walk checking the bracket after every move:
    the normalized bracket never changes, the raw bracket and
    the writhe only change under R1
    """

    def __init__(self, diagram, moves, engine="contract", removals=False, verbose=0):
        self.diagram = diagram
        self.moves = tuple(m for m in MoveKind if m in set(moves))
        self.engine = engine
        self.removals = removals
        self.v = verbose

    def _violation(self, step, check, expected, got):
        return {"step": step.step,
                "move": step.describe(),
                "check": check,
                "expected": str(expected),
                "got": str(got)}

    def _check(self, step, raw, w, previous_raw, previous_w, normalized):
        got = raw.scale(lp_pow_writhe(w))
        if got != normalized:
            return self._violation(step, "normalized bracket changed", normalized, got)
        if step.move in R1_MOVES:
            if abs(w - previous_w) != 1:
                return self._violation(step, "R1 must change the writhe by 1",
                                       previous_w, w)
            return None
        if w != previous_w:
            return self._violation(step, "writhe changed", previous_w, w)
        if raw != previous_raw:
            return self._violation(step, "raw bracket changed", previous_raw, raw)
        return None

    def run(self, seed, n_steps):
        start = time.time()
        result = FuzzResult(seed=seed, steps=n_steps, moves=self.moves)
        raw = bracket(self.diagram, self.engine)
        w = writhe(self.diagram)
        normalized = raw.scale(lp_pow_writhe(w))
        D = self.diagram
        walk = iter_move_walk(self.diagram, seed, n_steps, self.moves, self.removals)
        for step in tqdm(walk, total=n_steps, disable=self.v < 2, file=sys.stderr):
            D = step.diagram
            new_raw = bracket(D, self.engine)
            new_w = writhe(D)
            result.applied.append(step.describe())
            result.violation = self._check(step, new_raw, new_w, raw, w, normalized)
            if result.violation is not None:
                break
            raw, w = new_raw, new_w
        result.final_crossings = D.n_crossings
        if self.v > 0:
            print(f"Time to fuzz {len(result.applied)} moves: "
                  f"{np.around(time.time() - start, 2)}", file=sys.stderr)
        return result
