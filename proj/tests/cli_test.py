"""End-to-end checks of the modserre command line: outputs, exit codes and
the JSON report schema."""

import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = ""
SOURCE = Path()

HEADLINE = "q^7 + 5q^6 + 16q^5 + 29q^4 + 29q^3 + 16q^2 + 5q + 1"


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=300)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        schema = json.loads((SOURCE / "docs" / "slot_report.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)

    def write_table(self, text):
        f = tempfile.NamedTemporaryFile("w", suffix=".dat", delete=False)
        f.write(text)
        f.close()
        self.addCleanup(Path(f.name).unlink)
        return f.name

    def test_compute_headline_text(self):
        r = run("compute", "--g", "3", "--n", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("rank: " + HEADLINE, r.stdout)
        self.assertIn("duality: ok", r.stdout)

    def test_compute_json_matches_schema(self):
        r = run("compute", "--g", "3", "--n", "1", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(r.stdout)
        self.validator.validate(report)
        self.assertEqual(report["rank_q"], [1, 5, 16, 29, 29, 16, 5, 1])
        self.assertEqual(report["schur"], [{"partition": [1], "coeff_q": [1, 5, 16, 29, 29, 16, 5, 1]}])
        self.assertTrue(report["duality"])

    def test_table_json_matches_schema(self):
        r = run("table", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        reports = json.loads(r.stdout)
        self.assertEqual(len(reports), 14)
        for report in reports:
            self.validator.validate(report)
            self.assertTrue(report["duality"])
            q = report["rank_q"]
            self.assertEqual(q, q[::-1])
        by_slot = {(x["g"], x["n"]): x["rank_q"] for x in reports}
        self.assertEqual(by_slot[(0, 5)], [1, 5, 1])
        self.assertEqual(by_slot[(0, 6)], [1, 16, 16, 1])
        self.assertEqual(by_slot[(0, 7)], [1, 42, 127, 42, 1])
        self.assertEqual(by_slot[(2, 1)], [1, 3, 5, 3, 1])

    def test_compute_latex(self):
        r = run("compute", "--g", "0", "--n", "4", "--format", "latex")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("(q + 1)s_{4}", r.stdout)

    def test_withhold(self):
        r = run("compute", "--g", "3", "--n", "1", "--withhold", "3,1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("rank: 3q^6 + 15q^5 + 29q^4 + 29q^3 + 16q^2 + 4q", r.stdout)

    def test_literal_mode_fails_duality(self):
        r = run("compute", "--g", "3", "--n", "1", "--delta-mode", "literal")
        self.assertEqual(r.returncode, 5)
        self.assertNotIn("rank: " + HEADLINE, r.stdout)

    def test_verify(self):
        r = run("verify")
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        r = run("verify", "--format", "json")
        self.assertEqual(r.returncode, 0)
        checks = json.loads(r.stdout)
        self.assertEqual({c["id"] for c in checks}, {f"A{i}" for i in range(1, 8)})
        self.assertTrue(all(c["passed"] for c in checks))

    def test_verify_corrupted_dataset(self):
        text = (SOURCE / "data" / "moduli_serre.dat").read_text()
        self.assertIn("M[2,3]", text)
        lines = [l + " - q^6*s[3]" if l.startswith("M[2,3]") else l for l in text.splitlines()]
        r = run("verify", "--input", self.write_table("\n".join(lines) + "\n"))
        self.assertEqual(r.returncode, 5)
        self.assertIn("FAIL", r.stdout)

    def test_expr(self):
        r = run("expr", "q*s[4] - s[2,2]")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("(- (* q s[4]) s[2,2])", r.stdout)
        r = run("expr", "p[1]^2", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout), [{"lambda": 0, "p": [1, 1], "coeff": {"u^0 v^0": "1"}}])

    def test_inputs(self):
        r = run("inputs", "--g", "1", "--n", "2", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        slots = [(x["g"], x["n"]) for x in json.loads(r.stdout)]
        self.assertEqual(set(slots), {(0, 3), (1, 1), (0, 4), (1, 2)})

    def test_parse_errors(self):
        r = run("expr", "qs[4]")
        self.assertEqual(r.returncode, 3)
        self.assertIn("unknown identifier 'qs'", r.stderr)
        r = run("expr", "s[1,2]")
        self.assertEqual(r.returncode, 3)
        self.assertIn("weakly decreasing", r.stderr)
        path = self.write_table("M[0,3] = s[3]\nM[0,4] = qs[4]\n")
        r = run("compute", "--g", "0", "--n", "3", "--input", path)
        self.assertEqual(r.returncode, 3)
        self.assertIn("line 2, column 10", r.stderr)
        self.assertIn(path, r.stderr)

    def test_preconditions(self):
        r = run("compute", "--g", "3", "--n", "1", "--truncation", "4")
        self.assertEqual(r.returncode, 4)
        r = run("compute", "--g", "0", "--n", "2")
        self.assertEqual(r.returncode, 4)

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("compute", "--g", "3").returncode, 2)
        self.assertEqual(run("compute", "--g", "3", "--n", "1", "--format", "yaml").returncode, 2)
        self.assertEqual(run("compute", "--g", "3", "--n", "1", "--withhold", "x").returncode, 2)


if __name__ == "__main__":
    BINARY = sys.argv[1]
    SOURCE = Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
