import json
import unittest

import pyopgen as pog


class TestPresentation(unittest.TestCase):

    def setUp(self):
        self.m = pog.Generator("m", 2)
        self.gens = {"m": self.m}

    def test_reduction(self):
        relations = [pog.parse_monomial("m(m(m(-,-),-),-)", self.gens),
                     pog.parse_monomial("m(m(-,-),-)", self.gens),
                     pog.parse_monomial("m(m(-,-),-)", self.gens)]
        p = pog.Presentation(pog.OperadKind.NONSYM, [self.m], relations)
        self.assertEqual(["m(m(-,-),-)"], [rel.key for rel in p.relations])
        self.assertTrue(pog.is_reduced(p))

    def test_reduce_relations_keeps_order(self):
        first = pog.parse_monomial("m(-,m(-,-))", self.gens)
        second = pog.parse_monomial("m(m(-,-),-)", self.gens)
        self.assertEqual([first, second], pog.reduce_relations([first, second, first]))

    def test_duplicate_generator(self):
        self.assertRaises(pog.DuplicateGeneratorError, pog.Presentation,
                          pog.OperadKind.NONSYM, [self.m, pog.Generator("m", 3)], [])

    def test_unknown_generator(self):
        relation = pog.parse_monomial("k(-,-)")
        self.assertRaises(pog.UnknownGeneratorError, pog.Presentation,
                          pog.OperadKind.NONSYM, [self.m], [relation])

    def test_arity_mismatch(self):
        relation = pog.parse_monomial("m(-,-,-)")
        self.assertRaises(pog.ArityMismatchError, pog.Presentation,
                          pog.OperadKind.NONSYM, [self.m], [relation])

    def test_kind_mismatch(self):
        relation = pog.parse_monomial("m(x1,x2)", self.gens, kind="shuffle")
        self.assertRaises(pog.KindMismatchError, pog.Presentation,
                          pog.OperadKind.NONSYM, [self.m], [relation])

    def test_shuffle_relation_not_canonical(self):
        relation = pog.parse_monomial("m(x2,x1)", self.gens, kind="shuffle")
        self.assertRaises(pog.InvalidLabelingError, pog.Presentation,
                          pog.OperadKind.SHUFFLE, [self.m], [relation])

    def test_identity_relation(self):
        self.assertRaises(pog.InvalidLabelingError, pog.Presentation,
                          pog.OperadKind.NONSYM, [self.m], [pog.TreeMonomial()])

    def test_depth_bound(self):
        self.assertEqual(2, pog.get_builtin("free_binary").depth_bound)
        self.assertEqual(2, pog.get_builtin("assoc").depth_bound)
        self.assertEqual(4, pog.get_builtin("asw").depth_bound)

    def test_generator_lookup(self):
        p = pog.get_builtin("alia")
        self.assertEqual(2, p.generator("beta").arity)
        self.assertRaises(pog.UnknownGeneratorError, p.generator, "gamma")

class TestPresentationOutput(unittest.TestCase):

    def test_to_dict(self):
        data = pog.get_builtin("assoc").to_dict()
        self.assertEqual("nonsym", data["kind"])
        self.assertEqual([{"name": "mu", "arity": 2, "weight": 1}], data["generators"])
        self.assertEqual([["mu", ["mu", "-", "-"], "-"]], data["relations"])

    def test_shuffle_to_json(self):
        data = json.loads(pog.get_builtin("alia").to_json())
        self.assertEqual([["beta", 1, ["alpha", 2, 3]]], data["relations"])

    def test_dsl_round_trip(self):
        for name in ["asw", "alia", "nu2"]:
            p = pog.get_builtin(name)
            found = pog.parse_presentation(p.to_dsl())
            self.assertEqual(p.kind, found.kind)
            self.assertEqual(p.generators, found.generators)
            self.assertEqual(sorted(rel.key for rel in p.relations),
                             sorted(rel.key for rel in found.relations))

if __name__ == "__main__":
    unittest.main()
