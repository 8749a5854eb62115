import json
import unittest

import pyopgen as pog


class TestSolveCoefficients(unittest.TestCase):

    def setUp(self):
        self.system = pog.build_stump_system_nonsym(pog.get_builtin("assoc"))

    def test_assoc(self):
        solution = pog.solve_coefficients(self.system, 20)
        self.assertEqual([1] * 20, solution.dims())
        self.assertEqual(pog.TruncatedSeries.variable(order=20), solution["y0"])
        self.assertEqual(0, solution["y_mu"][1])

    def test_weighted(self):
        solution = pog.solve_coefficients(self.system, 5, weighted=True)
        self.assertTrue(solution.weighted)
        self.assertEqual([pog.t ** n for n in range(5)],
                         pog.weighted_dims(solution.total))

    def test_unweighted_ignores_weights(self):
        p = pog.parse_presentation("gen m : 2 weight 3\nrel m(m(-,-),-)")
        system = pog.build_stump_system_nonsym(p)
        solution = pog.solve_coefficients(system, 5)
        self.assertFalse(solution.total.is_weighted())
        self.assertEqual([1] * 5, solution.dims())

    def test_invalid_order(self):
        self.assertRaises(ValueError, pog.solve_coefficients, self.system, 0)

    def test_ill_founded(self):
        variables = [pog.Variable("y0", "z"), pog.Variable("y1", "a"),
                     pog.Variable("y2", "b")]
        equations = {"y1": [pog.Term(1, 0, ["y2"])],
                     "y2": [pog.Term(1, 0, ["y1"]), pog.Term(1, 0, ["y0"])]}
        system = pog.EqSystem("nonsym-product", variables, equations, "y0")
        self.assertRaises(pog.IllFoundedSystemError, pog.solve_coefficients, system, 4)

    def test_single_factor_chain(self):
        variables = [pog.Variable("y0", "z"), pog.Variable("y1", "a"),
                     pog.Variable("y2", "b")]
        equations = {"y1": [pog.Term(1, 0, ["y2"])],
                     "y2": [pog.Term(1, 0, ["y0", "y0"])]}
        system = pog.EqSystem("nonsym-product", variables, equations, "y0",
                              reported=["y1"])
        solution = pog.solve_coefficients(system, 4)
        self.assertEqual([0, 1, 0, 0], solution.dims())

    def test_to_json(self):
        data = json.loads(pog.solve_coefficients(self.system, 3).to_json())
        self.assertEqual([1, 1, 1], data["dims"])
        self.assertEqual(["0", "1", "1", "1"], data["total"]["coefficients"])

class TestEqSystem(unittest.TestCase):

    def test_unknown_factor(self):
        variables = [pog.Variable("y0", "z"), pog.Variable("y1", "a")]
        equations = {"y1": [pog.Term(1, 0, ["y3"])]}
        self.assertRaises(ValueError, pog.EqSystem, "nonsym-product",
                          variables, equations, "y0")

    def test_equation_for_ground(self):
        variables = [pog.Variable("y0", "z")]
        equations = {"y0": [pog.Term(1, 0, ["y0"])]}
        self.assertRaises(ValueError, pog.EqSystem, "nonsym-product",
                          variables, equations, "y0")

    def test_invalid_term(self):
        self.assertRaises(ValueError, pog.Term, 2, 0, ["y0"])
        self.assertRaises(ValueError, pog.Term, 1, -1, ["y0"])
        self.assertRaises(ValueError, pog.Term, 1, 0, [])
        self.assertRaises(ValueError, pog.Term, 1, 0, ["y0"], 0)

    def test_to_dict(self):
        system = pog.build_stump_system_nonsym(pog.get_builtin("assoc"))
        data = system.to_dict()
        self.assertEqual("nonsym-product", data["kind"])
        self.assertEqual("y0", data["ground"])
        equation = data["equations"][0]
        self.assertEqual("y_mu", equation["target"])
        self.assertEqual({"sign": 1, "t_exp": 1, "factors": ["y0", "y0"], "divisor": 1},
                         equation["terms"][0])

if __name__ == "__main__":
    unittest.main()
