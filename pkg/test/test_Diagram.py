import os
import json
import tempfile
import unittest

from pseudobracket.diagram import (PseudoDiagram, CrossingSign, Smoothing,
                                   ParseError, ValidationError, AmbiguousOrientation,
                                   NotClassical, load_diagram, parse_pd_text, parse_pd_json,
                                   diagram_from_dict, render_pd_text, render_pd_json,
                                   crossing_sign, writhe, make_pseudo, switch_crossing,
                                   mirror_diagram, relabel, smooth_crossing,
                                   knotinfo_pd_to_text)
from pseudobracket.bracket import bracket
from pseudobracket.moves import random_braid_diagram

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


class TestParse(unittest.TestCase):

    def test_trefoil(self):
        D = load_diagram(fixture("trefoil.pd"))
        self.assertEqual(D.n_crossings, 3)
        self.assertEqual(D.n_components, 1)
        self.assertEqual(D.successor, {1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 1})
        self.assertEqual(len(D.faces()), 5)
        self.assertEqual(render_pd_text(D), "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")

    def test_unknot(self):
        D = load_diagram(fixture("unknot.pd"))
        self.assertEqual(D.n_crossings, 0)
        self.assertEqual(D.free_loops, (1,))
        self.assertEqual(len(D.faces()), 2)

    def test_links(self):
        hopf = load_diagram(fixture("hopf.json"))
        self.assertEqual(hopf.n_components, 2)
        self.assertEqual(len(hopf.faces()), 4)
        self.assertEqual(writhe(hopf), 2)
        loops = load_diagram(fixture("two_unknots.json"))
        self.assertEqual(loops.free_loops, (1, 2))
        self.assertEqual(loops.n_components, 2)

    def test_kinks(self):
        kink = load_diagram(fixture("kink.pd"))
        self.assertEqual(len(kink.faces()), 3)
        self.assertEqual(writhe(kink), 1)
        self.assertEqual(writhe(load_diagram(fixture("doublekink.pd"))), 2)

    def test_comments_and_whitespace(self):
        D = parse_pd_text("# trefoil\nX(1,5,2,4)\n  X(3,1,4,6)   # second\nX(5,3,6,2)\n")
        self.assertEqual(D, load_diagram(fixture("trefoil.pd")))

    def test_parse_errors(self):
        self.assertRaises(ParseError, load_diagram, fixture("bad.pd"))
        self.assertRaises(ParseError, parse_pd_text, "Y(1,2,3,4)")
        self.assertRaises(ParseError, parse_pd_text, "X(1,2,a,2)")
        self.assertRaises(ParseError, parse_pd_json, "{not json")
        self.assertRaises(ParseError, parse_pd_json, '{"crossings": []}')
        self.assertRaises(ParseError, parse_pd_json,
                          '{"crossings": [{"kind": "Q", "arcs": [1, 1, 2, 2]}],'
                          ' "successor": {"1": 2, "2": 1}}')

    def test_unknown_extension(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "trefoil.txt")
            with open(path, "w") as fh:
                fh.write("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
            self.assertRaises(ParseError, load_diagram, path)

    def test_validation_errors(self):
        # Arcs must be 1..2n
        self.assertRaises(ValidationError, parse_pd_text, "X(1,2,3,4)")
        # Under-strand running backwards
        self.assertRaises(ValidationError, parse_pd_text,
                          "X(2,5,1,4) X(3,1,4,6) X(5,3,6,2)")
        # An arc appearing three times
        self.assertRaises(ValidationError, diagram_from_dict,
                          {"crossings": [{"kind": "X", "arcs": [1, 1, 1, 2]}],
                           "successor": {"1": 2, "2": 1}})
        # Free arc that is not a loop
        self.assertRaises(ValidationError, PseudoDiagram, [], {1: 2, 2: 1})

    def test_ambiguous_orientation(self):
        # Two pseudo crossings between 2-arc components fix no direction
        data = {"crossings": [{"kind": "P", "arcs": [1, 3, 2, 4]},
                              {"kind": "P", "arcs": [3, 1, 4, 2]}],
                "successor": {"1": 2, "2": 1, "3": 4, "4": 3}}
        self.assertRaises(AmbiguousOrientation, diagram_from_dict, data)

    def test_json_round_trip(self):
        D = load_diagram(fixture("pt.pd"))
        self.assertEqual(parse_pd_json(render_pd_json(D)), D)
        data = json.loads(render_pd_json(D))
        self.assertEqual(data["crossings"][0], {"kind": "P", "arcs": [1, 5, 2, 4]})


class TestCrossings(unittest.TestCase):
    trefoil = fixture("trefoil.pd")
    atlas = fixture("trefoil_atlas.pd")

    def test_signs(self):
        D = load_diagram(self.trefoil)
        self.assertEqual([crossing_sign(D, i) for i in range(3)],
                         [CrossingSign.POSITIVE] * 3)
        self.assertEqual(writhe(D), 3)
        self.assertEqual(writhe(load_diagram(self.atlas)), -3)
        self.assertRaises(IndexError, crossing_sign, D, 3)

    def test_make_pseudo(self):
        D = load_diagram(self.trefoil)
        pt = make_pseudo(D, 0)
        self.assertEqual(pt, load_diagram(fixture("pt.pd")))
        self.assertEqual(pt.n_pseudo, 1)
        self.assertEqual(writhe(pt), 2)
        self.assertRaises(NotClassical, crossing_sign, pt, 0)
        self.assertRaises(NotClassical, make_pseudo, pt, 0)

    def test_switch(self):
        D = load_diagram(self.trefoil)
        switched = switch_crossing(D, 0)
        self.assertEqual(crossing_sign(switched, 0), CrossingSign.NEGATIVE)
        self.assertEqual(writhe(switched), 1)
        self.assertEqual(switch_crossing(switched, 0), D)

    def test_mirror(self):
        D = load_diagram(self.trefoil)
        self.assertEqual(writhe(mirror_diagram(D)), -3)
        self.assertEqual(mirror_diagram(mirror_diagram(D)), D)

    def test_rotated_pseudo(self):
        rotations = 0
        for seed in range(40):
            D = random_braid_diagram(seed, max_crossings=8, pseudo=0.5)
            value = bracket(D)
            for i, crossing in enumerate(D.crossings):
                if not crossing.is_pseudo:
                    continue
                for k in (1, 2, 3):
                    crossings = list(D.crossings)
                    crossings[i] = crossing.rotated(k)
                    self.assertEqual(bracket(PseudoDiagram(crossings, D.successor)), value,
                                     f"seed {seed} crossing {i} rotated by {k}")
                    rotations += 1
        self.assertGreater(rotations, 40)

    def test_relabel(self):
        D = load_diagram(self.trefoil)
        self.assertEqual(relabel(D), D)
        shifted = PseudoDiagram([(c.kind, tuple(a + 10 for a in c.arcs)) for c in D.crossings],
                                {k + 10: v + 10 for k, v in D.successor.items()})
        self.assertEqual(relabel(shifted), D)


class TestSmoothing(unittest.TestCase):
    trefoil = fixture("trefoil.pd")

    def test_trefoil(self):
        D = load_diagram(self.trefoil)
        vertical = smooth_crossing(D, 0, Smoothing.VERTICAL)
        horizontal = smooth_crossing(D, 0, Smoothing.HORIZONTAL)
        self.assertEqual(vertical.n_crossings, 2)
        self.assertEqual(horizontal.n_crossings, 2)
        # The oriented smoothing of a knot crossing gives a 2-component link
        self.assertEqual(vertical.n_components, 2)
        self.assertEqual(horizontal.n_components, 1)

    def test_kink(self):
        D = load_diagram(fixture("kink.pd"))
        vertical = smooth_crossing(D, 0, Smoothing.VERTICAL)
        horizontal = smooth_crossing(D, 0, Smoothing.HORIZONTAL)
        self.assertEqual(vertical.n_crossings, 0)
        self.assertEqual(len(vertical.free_loops), 2)
        self.assertEqual(len(horizontal.free_loops), 1)

    def test_slots(self):
        D = load_diagram(self.trefoil)
        self.assertEqual(D.smoothing_slots(0, Smoothing.VERTICAL), ((0, 1), (2, 3)))
        self.assertEqual(D.smoothing_slots(0, Smoothing.HORIZONTAL), ((0, 3), (1, 2)))
        self.assertRaises(IndexError, smooth_crossing, D, 5, Smoothing.VERTICAL)


class TestKnotInfo(unittest.TestCase):

    def test_formats(self):
        text = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
        self.assertEqual(knotinfo_pd_to_text("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"), text)
        self.assertEqual(knotinfo_pd_to_text("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"), text)
        self.assertEqual(knotinfo_pd_to_text("[[1,4,2,5];[3,6,4,1];[5,2,6,3]]"), text)
        self.assertEqual(knotinfo_pd_to_text("[]"), "")
        self.assertEqual(parse_pd_text(text), load_diagram(fixture("trefoil_atlas.pd")))

    def test_malformed(self):
        self.assertRaises(ParseError, knotinfo_pd_to_text, "[[1,2,3]]")
        self.assertRaises(ParseError, knotinfo_pd_to_text, "PD[X[1,2")
        self.assertRaises(ParseError, knotinfo_pd_to_text, "7")
