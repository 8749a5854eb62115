import unittest

from numpy.random import default_rng

import pyopgen as pog


class TestRandomGenerators(unittest.TestCase):

    def test_ranges(self):
        rng = default_rng(seed=3)
        for _ in range(20):
            generators = pog.random_generators(rng, max_generators=3, max_arity=4)
            self.assertTrue(1 <= len(generators) <= 3)
            self.assertTrue(all(2 <= gen.arity <= 4 for gen in generators))

    def test_invalid(self):
        rng = default_rng(seed=3)
        self.assertRaises(ValueError, pog.random_generators, rng, 0)
        self.assertRaises(ValueError, pog.random_generators, rng, 2, 3, 2)

    def test_shape_depth(self):
        rng = default_rng(seed=5)
        generators = [pog.Generator("a", 2), pog.Generator("b", 3)]
        for _ in range(20):
            shape = pog.random_shape(rng, generators, 3)
            self.assertTrue(1 <= shape.depth <= 3)
        self.assertRaises(ValueError, pog.random_shape, rng, generators, 0)

class TestRandomPresentations(unittest.TestCase):

    def test_nonsym_is_reproducible(self):
        first = pog.random_nonsym_presentation(seed=11)
        second = pog.random_nonsym_presentation(seed=11)
        self.assertEqual(first.to_dict(), second.to_dict())
        self.assertEqual(pog.OperadKind.NONSYM, first.kind)

    def test_nonsym_relations(self):
        for seed in range(20):
            p = pog.random_nonsym_presentation(seed=seed)
            self.assertTrue(all(rel.nvertices >= 2 for rel in p.relations))
            self.assertTrue(all(rel.depth <= 3 for rel in p.relations))
            self.assertTrue(pog.is_reduced(p))

    def test_shuffle_is_regular(self):
        for seed in range(20):
            p = pog.random_shuffle_presentation(seed=seed)
            self.assertEqual(pog.OperadKind.SHUFFLE, p.kind)
            self.assertTrue(pog.check_shuffle_regular(p))
            self.assertTrue(all(rel.arity <= 5 for rel in p.relations))

if __name__ == "__main__":
    unittest.main()
