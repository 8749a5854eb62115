import unittest

import pyopgen as pog

HALF_CLASS = "operad shuffle\ngen m : 2\nrel m(m(x1,x2),x3)"


class TestNonsymStumpSystem(unittest.TestCase):

    def setUp(self):
        self.system = pog.build_stump_system_nonsym(pog.get_builtin("assoc"))

    def test_assoc_variables(self):
        self.assertEqual(pog.SystemKind.NONSYM_PRODUCT, self.system.kind)
        self.assertEqual("y0", self.system.ground_variable)
        self.assertEqual(["y_mu"], self.system.unknowns)
        self.assertEqual("mu(-,-)", self.system.variable("y_mu").descriptor)

    def test_assoc_equation(self):
        self.assertEqual("y_mu = z^2 + z*y_mu",
                         pog.equation_text(self.system, "y_mu"))
        self.assertEqual(2, self.system.num_terms())

    def test_free_binary(self):
        system = pog.build_stump_system_nonsym(pog.get_builtin("free_binary"))
        self.assertEqual(4, len(system.equations["y_mu"]))
        solution = pog.solve_coefficients(system, 6)
        self.assertEqual([1, 1, 2, 5, 14, 42], solution.dims())

    def test_merging_keeps_dims(self):
        p = pog.get_builtin("asw")
        merged = pog.build_stump_system_nonsym(p)
        plain = pog.build_stump_system_nonsym(p, merge_equivalent=False)
        self.assertLessEqual(len(merged.variables), len(plain.variables))
        self.assertEqual(pog.solve_coefficients(merged, 10).dims(),
                         pog.solve_coefficients(plain, 10).dims())

    def test_wrong_kind(self):
        self.assertRaises(pog.KindMismatchError, pog.build_stump_system_nonsym,
                          pog.get_builtin("alia"))

class TestShuffleStumpSystem(unittest.TestCase):

    def setUp(self):
        self.system = pog.build_stump_system_shuffle(pog.get_builtin("alia"))

    def test_alia_variables(self):
        self.assertEqual(pog.SystemKind.SHUFFLE_C, self.system.kind)
        self.assertEqual(["y_alpha", "y_beta"], sorted(self.system.unknowns))
        self.assertEqual(9, len(self.system.equations["y_alpha"]))
        self.assertEqual(6, len(self.system.equations["y_beta"]))

    def test_alia_dims(self):
        solution = pog.solve_coefficients(self.system, 5)
        self.assertEqual(pog.SeriesFlavor.EXPONENTIAL, solution.total.flavor)
        self.assertEqual([1, 2, 11, 100], solution.dims()[:4])

    def test_free_shuffle_binary(self):
        system = pog.build_stump_system_shuffle(pog.get_builtin("free_shuffle_binary"))
        solution = pog.solve_coefficients(system, 5)
        self.assertEqual([1, 1, 3, 15, 105], solution.dims())

    def test_not_regular(self):
        p = pog.parse_presentation(HALF_CLASS)
        with self.assertRaises(pog.NotRegularError) as context:
            pog.build_stump_system_shuffle(p)
        self.assertEqual("m(m(-,-),-)", context.exception.skeleton.key)
        self.assertEqual(["m(m(x1,x3),x2)"],
                         [monomial.key for monomial in context.exception.missing])

    def test_wrong_kind(self):
        self.assertRaises(pog.KindMismatchError, pog.build_stump_system_shuffle,
                          pog.get_builtin("assoc"))

class TestSymmetricRegularSystem(unittest.TestCase):

    def test_nu2_agrees_with_shuffle_system(self):
        p = pog.get_builtin("nu2")
        symmetric = pog.build_symmetric_regular_system(p)
        self.assertEqual(pog.SystemKind.SYMMETRIC_ALGEBRAIC, symmetric.kind)
        shuffle = pog.build_stump_system_shuffle(p)
        self.assertEqual(pog.solve_coefficients(shuffle, 8).total,
                         pog.solve_coefficients(symmetric, 8).total)

    def test_free_shuffle_binary(self):
        system = pog.build_symmetric_regular_system(pog.get_builtin("free_shuffle_binary"))
        solution = pog.solve_coefficients(system, 5)
        self.assertEqual([1, 1, 3, 15, 105], solution.dims())

    def test_alia_is_not_symmetric_regular(self):
        self.assertRaises(pog.NotRegularError, pog.build_symmetric_regular_system,
                          pog.get_builtin("alia"))

class TestBuildSystem(unittest.TestCase):

    def test_engines(self):
        assoc = pog.get_builtin("assoc")
        self.assertEqual(pog.SystemKind.NONSYM_PRODUCT, pog.build_system(assoc).kind)
        self.assertEqual(["y_id"], pog.build_system(assoc, "incl-excl").reported)
        alia = pog.get_builtin("alia")
        self.assertEqual(pog.SystemKind.SHUFFLE_C, pog.build_system(alia).kind)
        nu2 = pog.get_builtin("nu2")
        self.assertEqual(pog.SystemKind.SYMMETRIC_ALGEBRAIC,
                         pog.build_system(nu2, pog.SystemEngine.SYMMETRIC).kind)

if __name__ == "__main__":
    unittest.main()
