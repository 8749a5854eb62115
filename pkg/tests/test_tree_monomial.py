import unittest

import pyopgen as pog


class TestTreeMonomial(unittest.TestCase):

    def setUp(self):
        self.m = pog.Generator("m", 2)
        self.monomial = pog.parse_monomial("m(m(x1,x2),x3)",
                                           generators=[self.m],
                                           kind=pog.OperadKind.SHUFFLE)

    def test_properties(self):
        self.assertEqual("m(m(x1,x2),x3)", self.monomial.key)
        self.assertEqual(3, self.monomial.arity)
        self.assertEqual(2, self.monomial.depth)
        self.assertEqual(2, self.monomial.degree)
        self.assertEqual(2, self.monomial.nvertices)
        self.assertEqual(1, self.monomial.min_leaf)
        self.assertEqual([1, 2, 3], self.monomial.leaf_labels())
        self.assertEqual([self.m, self.m], self.monomial.generators())

    def test_leaf(self):
        leaf = pog.TreeMonomial.leaf()
        self.assertTrue(leaf.is_leaf())
        self.assertTrue(leaf.is_placeholder())
        self.assertEqual("-", leaf.key)
        self.assertEqual(1, leaf.arity)
        self.assertEqual(0, leaf.depth)
        labelled = pog.TreeMonomial.leaf(3)
        self.assertEqual("x3", labelled.key)
        self.assertEqual(pog.OperadKind.SHUFFLE, labelled.kind)

    def test_corolla(self):
        corolla = pog.TreeMonomial.corolla(self.m)
        self.assertEqual("m(-,-)", corolla.key)
        labelled = pog.TreeMonomial.corolla(self.m, pog.OperadKind.SHUFFLE,
                                            labelled=True)
        self.assertEqual("m(x1,x2)", labelled.key)

    def test_truncated_keeps_minima(self):
        truncated = self.monomial.truncated(1)
        self.assertEqual("m(x1,x3)", truncated.key)
        self.assertEqual(self.monomial, self.monomial.truncated(2))
        self.assertEqual("x1", self.monomial.truncated(0).key)

    def test_truncated_negative(self):
        self.assertRaises(ValueError, self.monomial.truncated, -1)

    def test_erase_and_assign_labels(self):
        shape = self.monomial.erase_labels()
        self.assertEqual("m(m(-,-),-)", shape.key)
        self.assertEqual(self.monomial, shape.with_labels([1, 2, 3]))

    def test_relabeled(self):
        found = self.monomial.relabeled({1: 2, 2: 1, 3: 3})
        self.assertEqual("m(m(x2,x1),x3)", found.key)

    def test_kinds_are_compared(self):
        nonsym = self.monomial.with_kind(pog.OperadKind.NONSYM)
        self.assertEqual("m(m(-,-),-)", nonsym.key)
        self.assertNotEqual(nonsym, self.monomial.erase_labels())

    def test_arity_mismatch(self):
        leaf = pog.TreeMonomial()
        self.assertRaises(pog.ArityMismatchError,
                          pog.TreeMonomial, self.m, [leaf])

    def test_labelled_nonsym_leaf(self):
        self.assertRaises(pog.KindMismatchError, pog.TreeMonomial,
                          label=1, kind=pog.OperadKind.NONSYM)

    def test_mixed_kinds(self):
        children = [pog.TreeMonomial(), pog.TreeMonomial(label=1, kind=pog.OperadKind.SHUFFLE)]
        self.assertRaises(pog.KindMismatchError, pog.TreeMonomial, self.m, children)

class TestGenerator(unittest.TestCase):

    def test_invalid_arity(self):
        self.assertRaises(ValueError, pog.Generator, "u", 0)

    def test_invalid_name(self):
        self.assertRaises(ValueError, pog.Generator, "1m", 2)

    def test_weight(self):
        self.assertEqual(1, pog.Generator("m", 2).weight)
        self.assertEqual(3, pog.Generator("m", 2, weight=3).weight)

if __name__ == "__main__":
    unittest.main()
