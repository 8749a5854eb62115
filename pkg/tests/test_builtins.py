import unittest

import pyopgen as pog


class TestBuiltins(unittest.TestCase):

    def test_catalog(self):
        catalog = pog.builtin_presentations()
        for name in ["assoc", "asw", "alia", "nu2", "nu3", "lieadm",
                     "free_binary", "free_shuffle_binary"]:
            self.assertIn(name, catalog)
        self.assertEqual(pog.OperadKind.NONSYM, catalog["asw"].kind)
        self.assertEqual(pog.OperadKind.SHUFFLE, catalog["lieadm"].kind)

    def test_q_k(self):
        q3 = pog.get_builtin("q_k(3)")
        self.assertEqual(["mu(-,mu(mu(-,-),-))"], [rel.key for rel in q3.relations])
        self.assertEqual(q3.relations, pog.get_builtin("q_k:3").relations)
        q2 = pog.get_builtin("q_k(2)")
        self.assertEqual(pog.get_builtin("assoc").relations, q2.relations)

    def test_q_k_too_small(self):
        self.assertRaises(ValueError, pog.get_builtin, "q_k(1)")

    def test_unknown(self):
        self.assertRaises(pog.UnknownPresentationError, pog.get_builtin, "nosuch")

    def test_nu3_relations(self):
        p = pog.get_builtin("nu3")
        self.assertEqual(4, len(p.source_skeletons))
        self.assertTrue(all(rel.arity == 6 for rel in p.relations))

    def test_lieadm(self):
        p = pog.get_builtin("lieadm")
        keys = [rel.key for rel in p.relations]
        self.assertIn("alpha(x1,alpha(x2,x3))", keys)
        self.assertTrue(pog.check_shuffle_regular(p))

if __name__ == "__main__":
    unittest.main()
