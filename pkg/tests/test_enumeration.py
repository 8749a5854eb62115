import unittest

import pyopgen as pog


class TestBasisDims(unittest.TestCase):

    def test_assoc(self):
        self.assertEqual([1] * 10, pog.basis_dims(pog.get_builtin("assoc"), 10))

    def test_free_binary(self):
        found = pog.basis_dims(pog.get_builtin("free_binary"), 6)
        self.assertEqual([1, 1, 2, 5, 14, 42], found)

    def test_free_shuffle_binary(self):
        found = pog.basis_dims(pog.get_builtin("free_shuffle_binary"), 5)
        self.assertEqual([1, 1, 3, 15, 105], found)

    def test_alia(self):
        self.assertEqual([1, 2, 11, 100], pog.basis_dims(pog.get_builtin("alia"), 4))

    def test_asw(self):
        found = pog.basis_dims(pog.get_builtin("asw"), 6)
        # z + z^2 (1 - z^2) / (1 - z - z^2)^2
        self.assertEqual([1, 1, 2, 4, 8, 15], found)

    def test_invalid_arity(self):
        self.assertRaises(ValueError, pog.basis_dims, pog.get_builtin("assoc"), 0)

    def test_ceiling(self):
        self.assertRaises(pog.EnumerationLimitError, pog.basis_dims,
                          pog.get_builtin("free_binary"), 8, 10)

class TestWeightedDims(unittest.TestCase):

    def test_assoc(self):
        found = pog.basis_dims_weighted(pog.get_builtin("assoc"), 5)
        self.assertEqual([pog.t ** n for n in range(5)], found)

    def test_free_binary(self):
        found = pog.basis_dims_weighted(pog.get_builtin("free_binary"), 3)
        self.assertEqual(2 * pog.t ** 2, found[2])

    def test_weights(self):
        p = pog.parse_presentation("gen m : 2 weight 3\nrel m(m(-,-),-)")
        found = pog.basis_dims_weighted(p, 4)
        self.assertEqual(pog.t ** 9, found[3])

class TestUnaryGenerators(unittest.TestCase):

    def test_nilpotent(self):
        p = pog.parse_presentation("gen u : 1\ngen m : 2\nrel u(u(-))")
        self.assertEqual(2, pog.basis_dims(p, 1)[0])

    def test_infinite(self):
        p = pog.parse_presentation("gen u : 1\ngen m : 2")
        self.assertRaises(pog.EnumerationLimitError, pog.basis_dims, p, 2)

class TestBasisMonomials(unittest.TestCase):

    def test_assoc(self):
        found = pog.basis_monomials(pog.get_builtin("assoc"), 3)
        self.assertEqual(["mu(-,mu(-,-))"], [monomial.key for monomial in found])

    def test_identity(self):
        found = pog.basis_monomials(pog.get_builtin("alia"), 1)
        self.assertEqual(["x1"], [monomial.key for monomial in found])

    def test_alia(self):
        found = pog.basis_monomials(pog.get_builtin("alia"), 2)
        self.assertEqual(["alpha(x1,x2)", "beta(x1,x2)"],
                         [monomial.key for monomial in found])
        found = pog.basis_monomials(pog.get_builtin("alia"), 3)
        self.assertEqual(11, len(found))
        self.assertTrue(all(pog.is_valid_shuffle(monomial) for monomial in found))

    def test_counts_agree(self):
        p = pog.get_builtin("asw")
        dims = pog.basis_dims(p, 6)
        for n in range(1, 7):
            self.assertEqual(dims[n - 1], len(pog.basis_monomials(p, n)))

    def test_unary_generators(self):
        p = pog.parse_presentation("gen u : 1\ngen m : 2\nrel u(u(-))")
        for n in range(1, 4):
            self.assertEqual(pog.basis_dims(p, n)[n - 1], len(pog.basis_monomials(p, n)))
        self.assertIn("u(m(-,u(-)))", [monomial.key for monomial in pog.basis_monomials(p, 2)])

    def test_infinite_unary_chain(self):
        p = pog.parse_presentation("gen u : 1\ngen m : 2")
        self.assertRaises(pog.EnumerationLimitError, pog.basis_monomials, p, 1)

if __name__ == "__main__":
    unittest.main()
