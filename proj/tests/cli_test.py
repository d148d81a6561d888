#!/usr/bin/env python3
# Copyright 2026 The gfjnf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the gfjnf command line tool.

Usage: cli_test.py PATH_TO_GFJNF [unittest args]
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None

NIL1 = "gfmat 3 1\n4\n0 0 1 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"
NIL2 = "gfmat 3 1\n4\n0 1 0 0\n0 0 0 0\n0 0 0 1\n0 0 0 0\n"
UNIPOTENT = "gfmat 3 1\n2\n1 1\n0 1\n"


def gfmat(p, k, rows, modulus=None):
    lines = [f"gfmat {p} {k}"]
    if modulus is not None:
        lines.append("modulus " + " ".join(map(str, modulus)))
    lines.append(str(len(rows)))
    lines += [" ".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


def permuted(rows, perm):
    """P A P^T for the permutation matrix P sending row i to perm[i]."""
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = rows[i][j]
    return out


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def run_cli(self, *args, env=None):
        full_env = dict(os.environ)
        full_env.pop("JNF_SEED", None)
        if env:
            full_env.update(env)
        return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=120)

    def test_identity(self):
        path = self.write("id.txt", gfmat(5, 1, [[1 if i == j else 0 for j in range(3)] for i in range(3)]))
        r = self.run_cli("jnf", "--json", path)
        self.assertEqual(r.returncode, 0, r.stderr)
        rep = json.loads(r.stdout)
        self.assertEqual(rep["divisors"], [{"factor": [4, 1], "power": 1}] * 3)
        self.assertEqual(rep["jnf"], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_nilpotent_text_report(self):
        r = self.run_cli("jnf", self.write("a.txt", NIL1))
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("verified: true", r.stdout)
        self.assertIn("(0 1)^2\n  (0 1)^1\n  (0 1)^1", r.stdout)

    def test_json_schema(self):
        text = gfmat(11, 2, [[5, 7, 0], [120, 1, 2], [0, 0, 13]], modulus=[1, 0, 1])
        r = self.run_cli("jnf", "--json", "--seed", "9", self.write("m.txt", text))
        self.assertEqual(r.returncode, 0, r.stderr)
        rep = json.loads(r.stdout)
        self.assertEqual(set(rep), {"field", "n", "divisors", "jnf", "basis", "verified", "seed"})
        self.assertEqual(rep["field"], {"p": 11, "k": 2, "modulus": [1, 0, 1]})
        self.assertEqual(rep["n"], 3)
        self.assertEqual(rep["seed"], 9)
        self.assertIs(rep["verified"], True)
        for d in rep["divisors"]:
            self.assertEqual(set(d), {"factor", "power"})
            self.assertEqual(d["factor"][-1], 1)
        deg = sum((len(d["factor"]) - 1) * d["power"] for d in rep["divisors"])
        self.assertEqual(deg, 3)
        for key in ("jnf", "basis"):
            self.assertEqual(len(rep[key]), 3)
            self.assertTrue(all(len(row) == 3 and all(0 <= x < 121 for x in row) for row in rep[key]))

    def test_determinism(self):
        rows = [[(3 * i + 7 * j + i * j) % 7 for j in range(6)] for i in range(6)]
        path = self.write("d.txt", gfmat(7, 1, rows))
        for path_opt in ("general", "auto"):
            a = self.run_cli("jnf", "--json", "--seed", "42", "--path", path_opt, path)
            b = self.run_cli("jnf", "--json", "--seed", "42", "--path", path_opt, path)
            self.assertEqual(a.returncode, 0, a.stderr)
            self.assertEqual(a.stdout, b.stdout)
        c = self.run_cli("jnf", "--json", path, env={"JNF_SEED": "42"})
        self.assertEqual(c.stdout, a.stdout)

    def test_paths(self):
        path = self.write("a.txt", NIL1)
        forms = set()
        for p in ("auto", "general"):
            r = self.run_cli("jnf", "--json", "--path", p, path)
            self.assertEqual(r.returncode, 0, r.stderr)
            forms.add(json.dumps(json.loads(r.stdout)["jnf"]))
        self.assertEqual(len(forms), 1)
        r = self.run_cli("jnf", "--path", "cyclic", path)
        self.assertEqual(r.returncode, 1)
        self.assertIn("error", r.stderr)
        r = self.run_cli("jnf", "--path", "fast", path)
        self.assertNotEqual(r.returncode, 0)

    def test_parse_errors(self):
        bad = {
            "range.txt": "gfmat 3 1\n1\n3\n",
            "short.txt": "gfmat 3 1\n2\n0 1\n0\n",
            "prime.txt": "gfmat 4 1\n1\n0\n",
            "empty.txt": "gfmat 3 1\n0\n",
        }
        for name, text in bad.items():
            r = self.run_cli("jnf", self.write(name, text))
            self.assertEqual(r.returncode, 1, name)
            self.assertEqual(r.stdout, "", name)
            self.assertTrue(r.stderr.strip(), name)
        r = self.run_cli("jnf", os.path.join(self.tmp.name, "missing.txt"))
        self.assertEqual(r.returncode, 1)

    def test_similar(self):
        a, b = self.write("a.txt", NIL1), self.write("b.txt", NIL2)
        r = self.run_cli("similar", a, b)
        self.assertEqual(r.returncode, 3)
        self.assertEqual(r.stdout.splitlines()[0], "similar: false")
        r = self.run_cli("similar", a, a)
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.splitlines()[0], "similar: true")
        self.assertIn("witness:", r.stdout)

    def test_similar_permuted_pair(self):
        rows = [[(i * i + 2 * j + 1) % 5 for j in range(5)] for i in range(5)]
        a = self.write("a.txt", gfmat(5, 1, rows))
        b = self.write("b.txt", gfmat(5, 1, permuted(rows, [2, 0, 4, 1, 3])))
        r = self.run_cli("similar", "--json", a, b)
        self.assertEqual(r.returncode, 0, r.stderr)
        rep = json.loads(r.stdout)
        self.assertIs(rep["similar"], True)
        x = rep["witness"]
        ra, rb = rows, permuted(rows, [2, 0, 4, 1, 3])
        mul = lambda p, q: [[sum(p[i][l] * q[l][j] for l in range(5)) % 5 for j in range(5)] for i in range(5)]
        self.assertEqual(mul(x, ra), mul(rb, x))

    def test_mismatch(self):
        r = self.run_cli("similar", self.write("a.txt", NIL1), self.write("u.txt", UNIPOTENT))
        self.assertEqual(r.returncode, 1)
        other = gfmat(5, 1, [[1, 1], [0, 1]])
        r = self.run_cli("similar", self.write("u.txt", UNIPOTENT), self.write("v.txt", other))
        self.assertEqual(r.returncode, 1)

    def test_sl(self):
        u = self.write("u.txt", UNIPOTENT)
        r = self.run_cli("sl-split", u)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("classes: 2", r.stdout)
        v = self.write("v.txt", gfmat(3, 1, [[1, 2], [0, 1]]))
        r = self.run_cli("sl-conjugate", u, v)
        self.assertEqual(r.returncode, 3)
        self.assertEqual(r.stdout.splitlines()[0], "sl-conjugate: false")
        r = self.run_cli("similar", u, v)
        self.assertEqual(r.returncode, 0)
        r = self.run_cli("sl-conjugate", u, u)
        self.assertEqual(r.returncode, 0)
        r = self.run_cli("sl-split", self.write("t.txt", gfmat(3, 1, [[2, 0], [0, 1]])))
        self.assertEqual(r.returncode, 1)

    def test_minpoly(self):
        a = self.write("a.txt", NIL1)
        r = self.run_cli("minpoly", a)
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.splitlines()[0], "minpoly: 0 0 1")
        r = self.run_cli("minpoly", "--char", a)
        self.assertEqual(r.stdout.splitlines()[0], "charpoly: 0 0 0 0 1")

    def test_bench_csv(self):
        out = os.path.join(self.tmp.name, "bench.csv")
        r = self.run_cli("bench", "--sizes", "8", "12", "--fields", "5", "121", "--trials", "2", "--csv", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        with open(out) as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows[0], ["field", "n", "case", "path", "median_ms", "verified"])
        body = rows[1:]
        self.assertEqual(len(body), 2 * 2 * 2 * 2)
        for field, n, case, path, ms, ok in body:
            self.assertIn(field, ("GF(5)", "GF(11^2)"))
            self.assertIn(n, ("8", "12"))
            self.assertIn((case, path), {("cyclic", "general"), ("cyclic", "cyclic"),
                                         ("irreducible", "general"), ("irreducible", "irreducible")})
            self.assertGreaterEqual(float(ms), 0.0)
            self.assertEqual(ok, "true")
        r = self.run_cli("bench", "--sizes", "6", "--fields", "3", "--trials", "1", "--cases", "cyclic")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = list(csv.reader(io.StringIO(r.stdout)))
        self.assertEqual(len(lines), 3)


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main()
