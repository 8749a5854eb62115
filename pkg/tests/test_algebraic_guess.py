import unittest

import pyopgen as pog

ALIA_CUBIC = "y^3 - 6*y^2 + 6*y - 6*z"
NU2_QUADRATIC = "3*y^2 + (2*z - 4)*y + 4*z - z^2"
NU3_QUARTIC = ("y^4 + (12*z - 24)*y^3 + (30*z^2 + 8*z + 80)*y^2"
               " + (-36*z^3 + 24*z^2 - 32*z - 64)*y + 9*z^4 - 8*z^3 + 16*z^2 + 64*z")


def solve_total(name, order=12, engine="stump"):
    system = pog.build_system(pog.get_builtin(name), engine)
    return pog.solve_coefficients(system, order).total


class TestAlgebraicEquation(unittest.TestCase):

    def test_normalization(self):
        found = pog.AlgebraicEquation.from_string("y^3/6 - y^2 + y - z")
        self.assertEqual(pog.AlgebraicEquation.from_string(ALIA_CUBIC), found)
        negated = pog.AlgebraicEquation.from_string("-" + "(" + ALIA_CUBIC + ")")
        self.assertEqual(found, negated)

    def test_degrees_and_coefficients(self):
        found = pog.AlgebraicEquation.from_string(ALIA_CUBIC)
        self.assertEqual(3, found.deg_y)
        self.assertEqual(1, found.deg_z)
        self.assertEqual(-6, found.coefficient(1, 0))
        self.assertEqual(1, found.coefficient(0, 3))

    def test_to_dict(self):
        found = pog.AlgebraicEquation.from_string(ALIA_CUBIC).to_dict()
        self.assertEqual(3, found["deg_y"])
        self.assertEqual([["0", "-6"], ["6", "0"], ["-6", "0"], ["1", "0"]],
                         found["coeffs"])
        self.assertNotIn("certified_order", found)

    def test_str(self):
        found = str(pog.AlgebraicEquation.from_string(ALIA_CUBIC))
        self.assertIn("y^3", found)
        self.assertTrue(found.endswith("= 0"))

    def test_zero(self):
        self.assertRaises(ValueError, pog.AlgebraicEquation.from_string, "0")

class TestVerifyEquation(unittest.TestCase):

    def test_alia(self):
        total = solve_total("alia")
        self.assertTrue(pog.verify_equation(
            total, pog.AlgebraicEquation.from_string(ALIA_CUBIC)))
        self.assertFalse(pog.verify_equation(
            total, pog.AlgebraicEquation.from_string(NU2_QUADRATIC)))

    def test_nu2(self):
        total = solve_total("nu2")
        self.assertTrue(pog.verify_equation(
            total, pog.AlgebraicEquation.from_string(NU2_QUADRATIC)))

    def test_nu3(self):
        total = solve_total("nu3", order=11, engine="symmetric")
        self.assertTrue(pog.verify_equation(
            total, pog.AlgebraicEquation.from_string(NU3_QUARTIC)))

class TestGuessAlgebraic(unittest.TestCase):

    def test_alia_cubic(self):
        found = pog.guess_algebraic(solve_total("alia"), 3, 1)
        self.assertEqual(pog.AlgebraicEquation.from_string(ALIA_CUBIC), found)
        self.assertEqual(12, found.certified_order)

    def test_search_finds_alia(self):
        found = pog.search_algebraic(solve_total("alia"))
        self.assertEqual(pog.AlgebraicEquation.from_string(ALIA_CUBIC), found)

    def test_nu2_quadratic(self):
        found = pog.search_algebraic(solve_total("nu2", order=14), max_deg_y=2)
        self.assertEqual(pog.AlgebraicEquation.from_string(NU2_QUADRATIC), found)

    def test_catalan(self):
        found = pog.guess_algebraic(solve_total("free_binary"), 2, 1)
        self.assertEqual(pog.AlgebraicEquation.from_string("y^2 - y + z"), found)

    def test_no_equation(self):
        self.assertIsNone(pog.guess_algebraic(solve_total("alia"), 1, 1))

    def test_insufficient_order(self):
        self.assertRaises(pog.InsufficientOrderError, pog.guess_algebraic,
                          solve_total("alia"), 3, 3)

if __name__ == "__main__":
    unittest.main()
