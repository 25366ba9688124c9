import os
import unittest
from unittest import mock

from pseudobracket.polynomial import LaurentPoly, PseudoPoly, A, A_INV, V, H, LOOP_VALUE
from pseudobracket.diagram import (Smoothing, load_diagram, make_pseudo, mirror_diagram,
                                   smooth_crossing, switch_crossing, crossing_sign)
from pseudobracket.bracket import (TooLarge, SmoothingState, DEFAULT_STATE_LIMIT,
                                   state_limit, smooth_and_count, state_weight,
                                   bracket_naive, bracket_contract, bracket,
                                   normalized_bracket, contraction_order, smoothed_bracket)
from pseudobracket.moves import braid_closure, random_braid_diagram

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "fixtures")

TREFOIL = LaurentPoly({-7: 1, -3: -1, 5: -1})
FIGURE8 = LaurentPoly({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})


class TestBracket(unittest.TestCase):
    trefoil = os.path.join(FIXTURES, "trefoil.pd")
    pt = os.path.join(FIXTURES, "pt.pd")

    def test_trefoil(self):
        D = load_diagram(self.trefoil)
        for engine in ["contract", "naive"]:
            value = bracket(D, engine)
            self.assertEqual(value, TREFOIL)
            self.assertEqual(str(value), "A^-7 - A^-3 - A^5")

    def test_known_values(self):
        expected = {"trefoil_atlas.pd": TREFOIL.mirror(),
                    "figure8.pd": FIGURE8,
                    "unknot.pd": LaurentPoly.constant(1),
                    "kink.pd": -A ** 3,
                    "doublekink.pd": A ** 6,
                    "hopf.json": LaurentPoly({4: -1, -4: -1}),
                    "two_unknots.json": LOOP_VALUE}
        for name, value in expected.items():
            D = load_diagram(os.path.join(FIXTURES, name))
            self.assertEqual(bracket_contract(D), value, name)
            self.assertEqual(bracket_naive(D), value, name)

    def test_pseudo_trefoil(self):
        D = load_diagram(self.pt)
        # Hand expansions of this value often print +A^4 V, the normalized
        # value A^-12 + A^-14 V - A^-2 V fixes the sign as -A^4 V
        raw = PseudoPoly({0: LaurentPoly({-6: 1}), 1: LaurentPoly({-8: 1, 4: -1})})
        self.assertEqual(bracket(D), raw)
        self.assertEqual(bracket(D, "naive"), raw)
        normalized = normalized_bracket(D)
        self.assertEqual(str(normalized), "A^-12 + A^-14*V - A^-2*V")

    def test_normalized_kinks(self):
        for name in ["kink.pd", "doublekink.pd", "unknot.pd"]:
            D = load_diagram(os.path.join(FIXTURES, name))
            self.assertEqual(normalized_bracket(D), 1, name)

    def test_engines_agree(self):
        for seed in range(500):
            D = random_braid_diagram(seed, max_crossings=12, pseudo=0.4)
            self.assertEqual(bracket_contract(D), bracket_naive(D), f"seed {seed}")

    def test_v_degree(self):
        for seed in range(100):
            D = random_braid_diagram(seed, max_crossings=10, pseudo=0.5)
            value = bracket(D)
            self.assertLessEqual(value.v_degree, D.n_pseudo, f"seed {seed}")
            if not D.n_pseudo:
                self.assertEqual(value.v_degree, 0, f"seed {seed}")

    def test_parallel_naive(self):
        D = braid_closure([1, -2, 1, -2, 1, -2, 1, -2, 1, "p2"])
        serial = bracket_naive(D)
        self.assertEqual(bracket_naive(D, serial=False, nprocs=2), serial)
        self.assertEqual(bracket_contract(D), serial)

    def test_mirror(self):
        for seed in range(6):
            D = random_braid_diagram(seed, max_crossings=6, pseudo=0.3)
            self.assertEqual(bracket(mirror_diagram(D)), bracket(D).mirror(), f"seed {seed}")

    def test_crossing_order(self):
        D = load_diagram(os.path.join(FIXTURES, "figure8.pd"))
        shuffled = type(D)(reversed(D.crossings), D.successor)
        self.assertEqual(bracket(shuffled), bracket(D))
        self.assertEqual(sorted(contraction_order(D)), [0, 1, 2, 3])

    def test_unknown_engine(self):
        D = load_diagram(self.trefoil)
        self.assertRaises(ValueError, bracket, D, "quantum")


class TestStateLimit(unittest.TestCase):
    trefoil = os.path.join(FIXTURES, "trefoil.pd")

    def test_limit(self):
        D = load_diagram(self.trefoil)
        self.assertRaises(TooLarge, bracket_naive, D, limit=2)
        self.assertRaises(TooLarge, bracket, D, "naive", limit=2)

    def test_environment(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(state_limit(), DEFAULT_STATE_LIMIT)
        with mock.patch.dict(os.environ, {"PSEUDOBRACKET_STATE_LIMIT": "2"}):
            self.assertEqual(state_limit(), 2)
            self.assertRaises(TooLarge, bracket_naive, load_diagram(self.trefoil))
        with mock.patch.dict(os.environ, {"PSEUDOBRACKET_STATE_LIMIT": "many"}):
            self.assertRaises(ValueError, state_limit)


class TestStates(unittest.TestCase):
    trefoil = os.path.join(FIXTURES, "trefoil.pd")
    pt = os.path.join(FIXTURES, "pt.pd")

    def test_loop_counts(self):
        D = load_diagram(self.trefoil)
        self.assertEqual(smooth_and_count(D, SmoothingState.uniform(Smoothing.VERTICAL, 3)), 2)
        self.assertEqual(smooth_and_count(D, SmoothingState.uniform(Smoothing.HORIZONTAL, 3)), 3)
        self.assertRaises(ValueError, smooth_and_count, D,
                          SmoothingState.uniform(Smoothing.VERTICAL, 2))

    def test_state_sum(self):
        for name in ["trefoil.pd", "pt.pd"]:
            D = load_diagram(os.path.join(FIXTURES, name))
            total = PseudoPoly()
            for bits in range(2 ** D.n_crossings):
                total = total + state_weight(D, SmoothingState.from_bits(bits, 3)).value()
            self.assertEqual(total, bracket(D), name)

    def test_state_weight(self):
        D = load_diagram(self.pt)
        weight = state_weight(D, SmoothingState.uniform(Smoothing.HORIZONTAL, 3))
        self.assertEqual(weight.classical, A_INV ** 2)
        self.assertEqual(weight.pseudo, H)
        self.assertEqual(weight.loops, 3)


class TestSkein(unittest.TestCase):
    trefoil = os.path.join(FIXTURES, "trefoil.pd")

    def test_skein_relations(self):
        D = load_diagram(self.trefoil)
        for i in range(3):
            vertical = bracket(smooth_crossing(D, i, Smoothing.VERTICAL))
            horizontal = bracket(smooth_crossing(D, i, Smoothing.HORIZONTAL))
            self.assertEqual(bracket(D), A * vertical + A_INV * horizontal)
            self.assertEqual(bracket(switch_crossing(D, i)),
                             A_INV * vertical + A * horizontal)
            self.assertEqual(bracket(make_pseudo(D, i)),
                             V * vertical + H * horizontal)

    def test_crossing_difference(self):
        # <D+> - <D-> = (A - A^-1)(<K_V> - <K_H>)
        D = load_diagram(self.trefoil)
        vertical = bracket(smooth_crossing(D, 0, Smoothing.VERTICAL))
        horizontal = bracket(smooth_crossing(D, 0, Smoothing.HORIZONTAL))
        self.assertEqual(bracket(D) - bracket(switch_crossing(D, 0)),
                         (A - A_INV) * (vertical - horizontal))


class TestPinned(unittest.TestCase):
    trefoil = os.path.join(FIXTURES, "trefoil.pd")

    def partials(self, D, i):
        return (smoothed_bracket(D, i, Smoothing.VERTICAL),
                smoothed_bracket(D, i, Smoothing.HORIZONTAL))

    def check_identities(self, D, name):
        value = bracket(D)
        for i, crossing in enumerate(D.crossings):
            vertical, horizontal = self.partials(D, i)
            if crossing.is_pseudo:
                self.assertEqual(value, V * vertical + H * horizontal, f"{name} crossing {i}")
                continue
            plus, minus = (A, A_INV) if crossing_sign(D, i) > 0 else (A_INV, A)
            self.assertEqual(value, plus * vertical + minus * horizontal,
                             f"{name} crossing {i}")
            self.assertEqual(bracket(switch_crossing(D, i)),
                             minus * vertical + plus * horizontal, f"{name} crossing {i}")
            self.assertEqual(bracket(make_pseudo(D, i)),
                             V * vertical + H * horizontal, f"{name} crossing {i}")
            # <D+> - <D-> = (A - A^-1)(<K_V> - <K_H>)
            difference = value - bracket(switch_crossing(D, i))
            if crossing_sign(D, i) < 0:
                difference = -difference
            self.assertEqual(difference, (A - A_INV) * (vertical - horizontal),
                             f"{name} crossing {i}")

    def test_mixed_braid(self):
        self.check_identities(braid_closure(["p1", 2, "p1", -2, 1, 2]), "p1 2 p1 -2 1 2")
        self.check_identities(braid_closure(["p1", 1, 1]), "p1 1 1")

    def test_random_pseudo_knots(self):
        for seed in range(30):
            D = random_braid_diagram(seed, max_crossings=7, pseudo=0.4, knot=True)
            self.check_identities(D, f"seed {seed}")

    def test_classical_matches_smoothing(self):
        for name in ["trefoil.pd", "figure8.pd"]:
            D = load_diagram(os.path.join(FIXTURES, name))
            for i in range(D.n_crossings):
                for smoothing in Smoothing:
                    self.assertEqual(smoothed_bracket(D, i, smoothing),
                                     bracket(smooth_crossing(D, i, smoothing)),
                                     f"{name} crossing {i} {smoothing}")

    def test_engines(self):
        D = braid_closure(["p1", 2, "p1", -2, 1, 2])
        for i in range(D.n_crossings):
            for smoothing in Smoothing:
                self.assertEqual(smoothed_bracket(D, i, smoothing, "naive"),
                                 smoothed_bracket(D, i, smoothing), f"crossing {i}")

    def test_errors(self):
        D = load_diagram(self.trefoil)
        self.assertRaises(IndexError, smoothed_bracket, D, 3, Smoothing.VERTICAL)
        self.assertRaises(ValueError, smoothed_bracket, D, 0, "vertical")
        self.assertRaises(TooLarge, smoothed_bracket, D, 0, Smoothing.VERTICAL,
                          engine="naive", limit=1)
