import unittest

import pyopgen as pog


def solve_total(name, order=12, engine="stump"):
    system = pog.build_system(pog.get_builtin(name), engine)
    return pog.solve_coefficients(system, order).total


class TestRationalFunction(unittest.TestCase):

    def test_lowest_terms(self):
        z = pog.z
        found = pog.RationalFunction(2 * z * (1 + z), (1 - z) * (1 + z) * 2)
        self.assertEqual(pog.RationalFunction(z, 1 - z), found)
        self.assertEqual([0, 1], found.num)
        self.assertEqual([1, -1], found.den)

    def test_constant_term_of_denominator(self):
        found = pog.RationalFunction(pog.z, 2 - 2 * pog.z)
        self.assertEqual(["0", "1/2"], found.to_dict()["num"])
        self.assertEqual(["1", "-1"], found.to_dict()["den"])

    def test_expand(self):
        found = pog.RationalFunction(1, 1 - pog.z).expand(3)
        self.assertEqual([1, 1, 1, 1], found)

    def test_series(self):
        found = pog.RationalFunction(pog.z, 1 - pog.z - pog.z ** 2).series(6)
        self.assertEqual([0, 1, 1, 2, 3, 5, 8], found.coefficients)

    def test_invalid(self):
        self.assertRaises(ValueError, pog.RationalFunction, 1, 0)
        self.assertRaises(ValueError, pog.RationalFunction, 1, pog.z)

    def test_to_dict(self):
        found = pog.RationalFunction(pog.z, 1 - pog.z, certified_order=12)
        self.assertEqual({"num": ["0", "1"], "den": ["1", "-1"], "certified_order": 12},
                         found.to_dict())

class TestGuessRational(unittest.TestCase):

    def test_assoc(self):
        found = pog.guess_rational(solve_total("assoc"))
        self.assertEqual(pog.RationalFunction(pog.z, 1 - pog.z), found)
        self.assertEqual(12, found.certified_order)

    def test_asw(self):
        z = pog.z
        den = (1 - z - z ** 2) ** 2
        expected = pog.RationalFunction(z * den + z ** 2 * (1 - z ** 2), den)
        self.assertEqual(expected, pog.guess_rational(solve_total("asw")))
        self.assertEqual(expected, pog.guess_rational(solve_total("asw", engine="incl-excl")))

    def test_catalan_is_not_rational(self):
        self.assertIsNone(pog.guess_rational(solve_total("free_binary")))

    def test_exponential_input(self):
        series = pog.exponential_series(10)
        self.assertEqual(pog.RationalFunction(pog.z, 1 - pog.z), pog.guess_rational(series))

    def test_insufficient_order(self):
        series = pog.TruncatedSeries([0, 1, 1, 1, 1])
        self.assertRaises(pog.InsufficientOrderError, pog.guess_rational,
                          series, max_deg=2)

    def test_degree_bound(self):
        z = pog.z
        series = pog.RationalFunction(z, (1 - z) ** 3).series(12)
        self.assertIsNone(pog.guess_rational(series, max_deg=2))
        self.assertEqual(pog.RationalFunction(z, (1 - z) ** 3),
                         pog.guess_rational(series, max_deg=3))

if __name__ == "__main__":
    unittest.main()
