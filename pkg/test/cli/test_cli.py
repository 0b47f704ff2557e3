#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : test_cli.py
# brief   : Tests of the radmax command line
#
# author  : radmax contributors
# created : 2026-09-20 15:03:58
# changed : 2026-10-18 20:41:07
# DESCRIPTION #################################################################
#
# This project is following the PEP8 style guide:
#
#    https://www.python.org/dev/peps/pep-0008/)
#
# COPYRIGHT ###################################################################
# Copyright 2026 radmax contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
###############################################################################

# REQUIRED PYTHON MODULES #####################################################
import contextlib
import io
import json
import os
import tempfile
import unittest

from radmax import config
from radmax.cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main, run
from radmax.constructions import build_H, build_self_centered
from radmax.graphs import Graph, eccentricity_profile, from_graph6, to_graph6

from helpers import graph6_oracle


class CliTestCase(unittest.TestCase):

    def run_cli(self, *argv):
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            outcome = run(list(argv))
        return outcome, err.getvalue()


class ConstructTest(CliTestCase):

    def test_self_centered(self):
        outcome, err = self.run_cli("construct", "-r", "4", "-d", "4", "-n", "11")
        self.assertEqual(outcome.code, EXIT_OK)
        g = from_graph6(outcome.payload)
        self.assertEqual(g, build_self_centered(4, 11).graph)
        sidecar = json.loads(err)
        self.assertEqual(sidecar["labels"]["x1"], 0)

    def test_h_6_9(self):
        outcome, _ = self.run_cli("construct", "-r", "6", "-d", "9", "-n", "17")
        self.assertEqual(outcome.code, EXIT_OK)
        self.assertEqual(outcome.payload.strip(), to_graph6(build_H(6, 9).graph))

    def test_extended(self):
        outcome, _ = self.run_cli("construct", "-r", "3", "-d", "4", "-n", "10")
        p = eccentricity_profile(from_graph6(outcome.payload))
        self.assertEqual((p.radius, p.diameter), (3, 4))

    def test_infeasible(self):
        outcome, err = self.run_cli("construct", "-r", "3", "-d", "5", "-n", "10")
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertEqual(outcome.payload, "")
        self.assertIn("2r-2", err)

    def test_unsupported_order(self):
        outcome, err = self.run_cli("construct", "-r", "4", "-d", "5", "-n", "10")
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertIn("3r-1", err)

    def test_sidecar_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "labels.json")
            outcome, err = self.run_cli(
                "construct", "-r", "3", "-d", "4", "-n", "9", "--sidecar", path
            )
            self.assertEqual(outcome.code, EXIT_OK)
            self.assertEqual(err, "")
            with open(path) as f:
                self.assertIn("x4'1", json.load(f)["labels"])

    def test_dot_output(self):
        outcome, _ = self.run_cli(
            "construct", "-r", "3", "-d", "4", "-n", "8", "--format", "dot"
        )
        self.assertRegex(outcome.payload, r"^(strict )?graph")
        back, _ = self.run_cli("convert", outcome.payload, "--to", "graph6")
        self.assertEqual(back.payload.strip(), to_graph6(build_H(3, 4).graph))

    def test_unwritable_sidecar(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "missing", "labels.json")
            outcome, err = self.run_cli(
                "construct", "-r", "3", "-d", "4", "-n", "8", "--sidecar", path
            )
            self.assertEqual(outcome.code, EXIT_USAGE)
            self.assertEqual(outcome.payload, "")
            self.assertIn("radmax construct:", err)
            outcome, err = self.run_cli(
                "construct", "-r", "3", "-d", "4", "-n", "8", "--sidecar", tmp
            )
            self.assertEqual(outcome.code, EXIT_USAGE)
            self.assertIn("radmax construct:", err)

    def test_main_exit_code_on_file_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "missing", "labels.json")
            with contextlib.redirect_stdout(io.StringIO()), \
                    contextlib.redirect_stderr(io.StringIO()):
                code = main(["construct", "-r", "3", "-d", "4", "-n", "8", "--sidecar", path])
        self.assertEqual(code, EXIT_USAGE)

    def test_max_order(self):
        outcome, err = self.run_cli(
            "--max-order", "10", "construct", "-r", "4", "-d", "4", "-n", "11"
        )
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertEqual(config.max_order(), config.DEFAULT_MAX_ORDER)


class VerifyTest(CliTestCase):

    def test_c4(self):
        outcome, _ = self.run_cli("verify", "Cr")
        self.assertEqual(outcome.code, EXIT_OK)

    def test_path(self):
        outcome, _ = self.run_cli("verify", graph6_oracle(3, [(0, 1), (1, 2)]))
        self.assertEqual(outcome.code, EXIT_REFUTED)
        self.assertEqual(outcome.payload, "")

    def test_complete(self):
        outcome, _ = self.run_cli("verify", to_graph6(Graph.complete(4)))
        self.assertEqual(outcome.code, EXIT_REFUTED)

    def test_disconnected(self):
        outcome, err = self.run_cli("verify", graph6_oracle(4, [(0, 1), (2, 3)]))
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertIn("disconnected", err)

    def test_malformed(self):
        outcome, err = self.run_cli("verify", "Cr!", "--from", "graph6")
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertIn("graph6", err)

    def test_certificate(self):
        outcome, _ = self.run_cli("verify", "Cr", "--certificate")
        self.assertEqual(outcome.code, EXIT_OK)
        cert = json.loads(outcome.payload)
        self.assertEqual(cert["radius"], 2)
        self.assertEqual(len(cert["entries"]), 2)

    def test_edgelist_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "c6.txt")
            with open(path, "w") as f:
                f.write("# n=6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
            outcome, _ = self.run_cli("verify", path, "--from", "edgelist")
        self.assertEqual(outcome.code, EXIT_OK)


class ConvertTest(CliTestCase):

    def test_round_trip_through_dot(self):
        g6 = to_graph6(build_H(4, 6).graph)
        dot, _ = self.run_cli("convert", g6, "--to", "dot")
        edgelist, _ = self.run_cli("convert", dot.payload, "--to", "edgelist")
        back, _ = self.run_cli("convert", edgelist.payload, "--to", "graph6")
        self.assertEqual(back.payload.strip(), g6)


class SearchCommandTest(CliTestCase):

    def test_bound(self):
        outcome, _ = self.run_cli("search", "--order", "4")
        self.assertEqual(outcome.code, EXIT_OK)
        report = json.loads(outcome.payload)
        self.assertTrue(report["holds"])
        self.assertEqual(report["orders"], [1, 2, 3, 4])
        self.assertEqual(report["extremal_examples"], {"n=4,r=2,d=2": ["C]"]})

    def test_minimum_order(self):
        outcome, _ = self.run_cli("search", "--order", "5", "--radius", "3")
        self.assertEqual(outcome.code, EXIT_OK)
        report = json.loads(outcome.payload)
        self.assertIsNone(report["minimum_order_found"])
        self.assertEqual(report["constructed_witness"]["order"], 8)

    def test_single_shard(self):
        outcome, _ = self.run_cli("search", "--order", "4", "--shards", "2", "--shard", "1")
        self.assertEqual(json.loads(outcome.payload)["shard_ids"], [1])

    def test_bad_shard(self):
        outcome, err = self.run_cli("search", "--order", "4", "--shards", "2", "--shard", "2")
        self.assertEqual(outcome.code, EXIT_USAGE)
        self.assertIn("--shard", err)

    def test_order_cap(self):
        outcome, _ = self.run_cli("search", "--order", "9")
        self.assertEqual(outcome.code, EXIT_USAGE)


class OtherCommandsTest(CliTestCase):

    def test_saturate(self):
        outcome, _ = self.run_cli("saturate", to_graph6(Graph.path(5)))
        self.assertEqual(outcome.code, EXIT_OK)
        g = from_graph6(outcome.payload)
        self.assertEqual(eccentricity_profile(g).radius, 2)

    def test_witnesses(self):
        outcome, _ = self.run_cli("witnesses", "-r", "6", "-d", "8")
        self.assertEqual(outcome.code, EXIT_OK)
        self.assertTrue(json.loads(outcome.payload)["passed"])

    def test_witnesses_infeasible(self):
        outcome, _ = self.run_cli("witnesses", "-r", "3", "-d", "3")
        self.assertEqual(outcome.code, EXIT_USAGE)

    def test_usage_error(self):
        outcome, _ = self.run_cli("construct", "-r", "3")
        self.assertEqual(outcome.code, EXIT_USAGE)

    def test_main_writes_payload(self):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = main(["verify", "Cr", "--certificate"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out.getvalue())["radius"], 2)
