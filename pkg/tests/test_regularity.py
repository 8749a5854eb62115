import unittest

import pyopgen as pog

HALF_CLASS = "operad shuffle\ngen m : 2\nrel m(m(x1,x2),x3)"


class TestExpandSkeleton(unittest.TestCase):

    def test_planar(self):
        shape = pog.parse_monomial("m(m(-,-),-)", kind="shuffle")
        found = pog.expand_planar_skeleton(pog.Skeleton(shape))
        self.assertEqual(["m(m(x1,x2),x3)", "m(m(x1,x3),x2)"],
                         [monomial.key for monomial in found])

    def test_tree(self):
        shape = pog.parse_monomial("m(m(-,-),-)", kind="shuffle")
        found = pog.expand_tree_skeleton(pog.Skeleton(shape, pog.SkeletonFlavor.TREE))
        self.assertEqual(["m(m(x1,x2),x3)", "m(m(x1,x3),x2)", "m(x1,m(x2,x3))"],
                         [monomial.key for monomial in found])

    def test_planar_rejects_tree(self):
        shape = pog.parse_monomial("m(m(-,-),-)", kind="shuffle")
        self.assertRaises(ValueError, pog.expand_planar_skeleton,
                          pog.Skeleton(shape, pog.SkeletonFlavor.TREE))

class TestRegularity(unittest.TestCase):

    def test_half_class(self):
        p = pog.parse_presentation(HALF_CLASS)
        self.assertFalse(pog.check_shuffle_regular(p))
        incomplete = pog.incomplete_skeleton_classes(p)
        self.assertEqual(1, len(incomplete))
        skeleton, missing = list(incomplete.items())[0]
        self.assertEqual("m(m(-,-),-)", skeleton.key)
        self.assertEqual(["m(m(x1,x3),x2)"], [monomial.key for monomial in missing])

    def test_alia(self):
        p = pog.get_builtin("alia")
        self.assertTrue(pog.check_shuffle_regular(p))
        self.assertFalse(pog.check_symmetric_regular(p))

    def test_nu2(self):
        p = pog.get_builtin("nu2")
        self.assertTrue(pog.check_shuffle_regular(p))
        self.assertTrue(pog.check_symmetric_regular(p))

    def test_nu3(self):
        p = pog.get_builtin("nu3")
        self.assertTrue(pog.check_symmetric_regular(p))

    def test_nonsym(self):
        self.assertRaises(pog.KindMismatchError, pog.check_shuffle_regular,
                          pog.get_builtin("assoc"))

if __name__ == "__main__":
    unittest.main()
