import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import pyopgen as pog
from pyopgen import cli


def run_cli(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = cli.main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TestDims(unittest.TestCase):

    def test_oracle(self):
        code, out, _ = run_cli("dims", "assoc", "--n", "5", "--oracle")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual("1, 1, 1, 1, 1", out.strip())

    def test_json(self):
        code, out, _ = run_cli("dims", "free_binary", "--n", "5", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        data = json.loads(out)
        self.assertEqual([1, 1, 2, 5, 14], data["dims"])
        self.assertEqual("stump", data["source"])

    def test_weighted(self):
        code, out, _ = run_cli("dims", "free_binary", "--n", "3", "--weighted", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        data = json.loads(out)
        self.assertEqual([1, 1, 2], data["dims"])
        self.assertEqual(["0", "0", "2"], data["weighted"][2])

    def test_unknown_input(self):
        code, out, err = run_cli("dims", "nosuch")
        self.assertEqual(cli.EXIT_INPUT_ERROR, code)
        self.assertEqual("", out)
        self.assertTrue(err.startswith("error:"))

    def test_usage_error(self):
        code, _, _ = run_cli("dims")
        self.assertEqual(cli.EXIT_INPUT_ERROR, code)

class TestSolveAndGuess(unittest.TestCase):

    def test_solve_text(self):
        code, out, _ = run_cli("solve", "assoc", "--n", "6")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("y_mu = z^2 + z*y_mu", out)
        self.assertIn("dims = 1, 1, 1, 1, 1, 1", out)

    def test_solve_ode(self):
        code, out, _ = run_cli("solve", "alia", "--n", "6", "--emit", "ode")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertTrue(out.startswith("z' = 1"))

    def test_solve_graph(self):
        code, out, _ = run_cli("solve", "free_binary", "--graph", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        data = json.loads(out)
        self.assertEqual("exponential-or-faster expected", data["growth"]["expectation"])

    def test_guess_rational(self):
        code, out, _ = run_cli("guess", "assoc", "--rational")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("certified to order 12", out)

    def test_guess_not_found(self):
        code, out, _ = run_cli("guess", "free_binary", "--json")
        self.assertEqual(cli.EXIT_NOT_FOUND, code)
        self.assertFalse(json.loads(out)["found"])

    def test_guess_algebraic(self):
        code, out, _ = run_cli("guess", "alia", "--algebraic", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        data = json.loads(out)
        self.assertEqual(3, data["result"]["deg_y"])
        self.assertEqual(1, data["result"]["deg_z"])

    def test_guess_order_follows_degrees(self):
        code, out, _ = run_cli("guess", "nu3", "--algebraic", "--deg-y", "4", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        quartic = pog.AlgebraicEquation.from_string(
            "y^4 + (12*z - 24)*y^3 + (30*z^2 + 8*z + 80)*y^2"
            " + (-36*z^3 + 24*z^2 - 32*z - 64)*y + 9*z^4 - 8*z^3 + 16*z^2 + 64*z")
        result = json.loads(out)["result"]
        self.assertEqual(quartic.to_dict()["coeffs"], result["coeffs"])
        self.assertEqual(30, result["certified_order"])

    def test_guess_explicit_order(self):
        code, out, _ = run_cli("guess", "nu3", "--algebraic", "--deg-y", "4", "--n", "12")
        self.assertEqual(cli.EXIT_NOT_FOUND, code)
        self.assertIn("up to order 12", out)

class TestCheckAndCrosscheck(unittest.TestCase):

    def test_check_nu2(self):
        code, out, _ = run_cli("check", "nu2", "--json")
        self.assertEqual(cli.EXIT_OK, code)
        data = json.loads(out)
        self.assertTrue(data["shuffle_regular"])
        self.assertTrue(data["symmetric_regular"])

    def test_check_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "half.opg")
            with open(path, "w") as file:
                file.write("operad shuffle\ngen m : 2\nrel m(m(x1,x2),x3)\n")
            code, out, _ = run_cli("check", path)
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("shuffle regular: no", out)
        self.assertIn("m(m(x1,x3),x2)", out)

    def test_crosscheck(self):
        code, out, _ = run_cli("crosscheck", "asw", "--n-oracle", "8")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("match up to arity 8", out)

    def test_crosscheck_mismatch(self):
        wrong = [1, 1, 2, 4, 8, 16]
        with mock.patch.object(cli, "basis_dims", return_value=wrong):
            code, out, _ = run_cli("crosscheck", "asw", "--n-oracle", "6", "--json")
        self.assertEqual(cli.EXIT_MISMATCH, code)
        self.assertEqual(6, json.loads(out)["first_diverging_arity"])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "dims.json")
            code, out, _ = run_cli("dims", "assoc", "--n", "3", "--json", "--out", path)
            with open(path) as file:
                data = json.load(file)
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual("", out)
        self.assertEqual([1, 1, 1], data["dims"])

if __name__ == "__main__":
    unittest.main()
