from .polynomial import (LaurentPoly, PseudoPoly, NotDivisible, DivisionByZero,
                         A, A_INV, LOOP_VALUE, V, H, exact_divide)
from .diagram import (PseudoDiagram, Crossing, CrossingKind, CrossingSign, Smoothing,
                      ParseError, ValidationError, AmbiguousOrientation, NotClassical,
                      parse_pd_text, parse_pd_json, load_diagram, crossing_sign, writhe,
                      make_pseudo, switch_crossing)
from .bracket import bracket, normalized_bracket, TooLarge
