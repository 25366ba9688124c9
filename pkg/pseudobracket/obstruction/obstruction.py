import sys
import time
import multiprocessing
from enum import Enum
from dataclasses import dataclass
import numpy as np
from tqdm import tqdm
from pseudobracket.polynomial import (LaurentPoly, PseudoPoly, exact_divide,
                                      NotDivisible, DivisionByZero)
from pseudobracket.diagram import (Smoothing, crossing_sign, make_pseudo,
                                   switch_crossing, NotClassical)
from pseudobracket.bracket import bracket, smoothed_bracket


class HasPseudoCrossings(ValueError):
    pass


class MultiComponent(ValueError):
    pass


class Verdict(Enum):
    NOT_COSMETIC = "NOT-COSMETIC"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ObstructionReport:
    crossing: int
    sign: int
    bracket_plus: PseudoPoly
    bracket_minus: PseudoPoly
    bracket_square: PseudoPoly
    bracket_vertical: PseudoPoly
    bracket_horizontal: PseudoPoly
    g: LaurentPoly
    v_part: PseudoPoly
    relation_plus_ok: bool
    relation_minus_ok: bool
    verdict: Verdict

    def to_dict(self):
        return {"crossing": self.crossing,
                "sign": self.sign,
                "verdict": self.verdict.value,
                "v_part": self.v_part.to_json(),
                "bracket_square": self.bracket_square.to_json(),
                "bracket_plus": self.bracket_plus.to_json(),
                "bracket_minus": self.bracket_minus.to_json(),
                "bracket_vertical": self.bracket_vertical.to_json(),
                "bracket_horizontal": self.bracket_horizontal.to_json(),
                "g": self.g.to_json(),
                "relation_plus_ok": self.relation_plus_ok,
                "relation_minus_ok": self.relation_minus_ok,
                "text": {"v_part": str(self.v_part),
                         "bracket_square": str(self.bracket_square)}}

    def row(self):
        return (str(self.crossing), f"{self.sign:+d}",
                self.verdict.value, str(self.v_part))


def check_classical_knot(D):
    if D.n_pseudo:
        raise HasPseudoCrossings(f"Diagram has {D.n_pseudo} pseudo crossings")
    if D.n_components != 1:
        raise MultiComponent(f"Diagram has {D.n_components} components, expected a knot")


def _relation_holds(bracket_sign, square, unit):
    """
    <D_sign> == unit * <D_square> with <D_square> V-free, via exact division
    """
    if not square.is_v_free() or not bracket_sign.is_v_free():
        return False
    try:
        quotient = exact_divide(bracket_sign.coefficient(0), square.coefficient(0))
    except (NotDivisible, DivisionByZero):
        return False
    return quotient == unit


# -A^3 and -A^-3
_UNIT_PLUS = LaurentPoly({3: -1})
_UNIT_MINUS = LaurentPoly({-3: -1})


def obstruct(D, i, engine="contract"):
    """
    Cosmetic crossing test at crossing i of a classical knot diagram.
    NOT-COSMETIC when <D_square> has a V term.
    """
    check_classical_knot(D)
    if not 0 <= i < D.n_crossings:
        raise IndexError(f"Crossing index {i} out of range (diagram has {D.n_crossings})")
    if D.crossings[i].is_pseudo:
        raise NotClassical(f"Crossing {i} is a pseudo crossing")
    sign = int(crossing_sign(D, i))
    original = bracket(D, engine)
    switched = bracket(switch_crossing(D, i), engine)
    plus, minus = (original, switched) if sign > 0 else (switched, original)
    square = bracket(make_pseudo(D, i), engine)
    vertical = smoothed_bracket(D, i, Smoothing.VERTICAL, engine)
    horizontal = smoothed_bracket(D, i, Smoothing.HORIZONTAL, engine)
    v_part = square.v_part()
    relation_plus_ok = _relation_holds(plus, square, _UNIT_PLUS)
    relation_minus_ok = _relation_holds(minus, square, _UNIT_MINUS)
    if not v_part:
        assert relation_plus_ok and relation_minus_ok, \
            f"V-free <D_square> at crossing {i} without the -A^(+-3) relations"
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.NOT_COSMETIC
    return ObstructionReport(crossing=i,
                             sign=sign,
                             bracket_plus=plus,
                             bracket_minus=minus,
                             bracket_square=square,
                             bracket_vertical=vertical,
                             bracket_horizontal=horizontal,
                             g=square.coefficient(0),
                             v_part=v_part,
                             relation_plus_ok=relation_plus_ok,
                             relation_minus_ok=relation_minus_ok,
                             verdict=verdict)


def obstruct_crossing(args):
    """
    Multiprocessing wrapper of obstruct
    """
    return obstruct(args["diagram"], args["crossing"], args["engine"])


class CrossingScanner(object):
    """
    Runs the obstruction over the crossings of a classical knot diagram
    """

    def __init__(self, diagram, engine="contract", serial=False, nprocs=None, verbose=0):
        check_classical_knot(diagram)
        self.diagram = diagram
        self.engine = engine
        self.serial = serial
        self.nprocs = nprocs or multiprocessing.cpu_count()
        self.v = verbose

    def obstruct(self, i):
        return obstruct(self.diagram, i, self.engine)

    def scan(self, crossings=None):
        """
        Reports ordered by crossing index
        """
        start = time.time()
        if crossings is None:
            crossings = range(self.diagram.n_crossings)
        calls = [{"diagram": self.diagram, "crossing": i, "engine": self.engine}
                 for i in crossings]
        if self.serial or len(calls) < 2:
            reports = [obstruct_crossing(c) for c in tqdm(calls, disable=self.v < 2,
                                                          file=sys.stderr)]
        else:
            with multiprocessing.Pool(self.nprocs) as pool:
                reports = pool.map(obstruct_crossing, calls)
        if self.v > 0:
            print(f"Time to scan {len(calls)} crossings: {np.around(time.time() - start, 2)}",
                  file=sys.stderr)
        return reports


def scan(D, engine="contract", serial=True, nprocs=None):
    return CrossingScanner(D, engine=engine, serial=serial, nprocs=nprocs).scan()


def render_table(reports):
    """
    Aligned text table: index, sign, verdict, v_part
    """
    rows = [("crossing", "sign", "verdict", "v_part")] + [r.row() for r in reports]
    widths = [max(len(row[k]) for row in rows) for k in range(3)]
    lines = []
    for row in rows:
        cells = [row[k].ljust(widths[k]) for k in range(3)] + [row[3]]
        lines.append("  ".join(cells))
    return "\n".join(lines)
