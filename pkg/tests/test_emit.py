import json
import unittest

import pyopgen as pog


class TestTextEmitter(unittest.TestCase):

    def setUp(self):
        self.system = pog.build_stump_system_nonsym(pog.get_builtin("assoc"))

    def test_text(self):
        text = pog.emit_system(self.system)
        self.assertIn("y_mu = z^2 + z*y_mu", text)
        self.assertIn("total = z + y_mu", text)
        self.assertTrue(text.startswith("# nonsym-product system"))

    def test_weighted_text(self):
        text = pog.emit_system(self.system, "text", weighted=True)
        self.assertIn("y_mu = t*z^2 + t*z*y_mu", text)

    def test_json(self):
        data = json.loads(pog.emit_system(self.system, pog.EmitFormat.JSON))
        self.assertEqual("nonsym-product", data["kind"])
        self.assertEqual(["y0", "y_mu"], [variable["id"] for variable in data["variables"]])

    def test_c_terms(self):
        system = pog.build_stump_system_shuffle(pog.get_builtin("alia"))
        self.assertIn("C(z, z)", pog.equation_text(system, "y_alpha"))

    def test_symmetric_divisors(self):
        system = pog.build_symmetric_regular_system(pog.get_builtin("free_shuffle_binary"))
        self.assertEqual("y_mu = 1/2*z^2 + z*y_mu + 1/2*y_mu^2",
                         pog.equation_text(system, "y_mu"))

class TestOdeEmitter(unittest.TestCase):

    def setUp(self):
        self.system = pog.build_stump_system_shuffle(pog.get_builtin("alia"))

    def test_text(self):
        text = pog.emit_system(self.system, "ode")
        lines = text.splitlines()
        self.assertEqual("z' = 1", lines[0])
        self.assertIn("y_alpha(0) = 0", lines)
        self.assertTrue(any(line.startswith("y_beta' = ") for line in lines))

    def test_residuals_vanish(self):
        solution = pog.solve_coefficients(self.system, 8)
        ode = pog.ode_system(self.system)
        for residual in ode.residuals(solution).values():
            self.assertEqual(pog.TruncatedSeries.zero(order=residual.order,
                                                      flavor=residual.flavor),
                             residual)

    def test_ghosts(self):
        system = pog.build_stump_system_shuffle(pog.get_builtin("nu2"))
        ode = pog.ode_system(system)
        solution = pog.solve_coefficients(system, 7)
        for ghost, factors in ode.ghosts.items():
            self.assertTrue(ghost.startswith("h"))
            self.assertGreater(len(factors), 1)
        for residual in ode.residuals(solution).values():
            self.assertIsNone(residual.valuation())

    def test_nonsym_has_no_ode(self):
        nonsym = pog.build_stump_system_nonsym(pog.get_builtin("assoc"))
        self.assertRaises(pog.EmitFormatError, pog.emit_system, nonsym, "ode")

if __name__ == "__main__":
    unittest.main()
