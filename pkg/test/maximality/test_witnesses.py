#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : test_witnesses.py
# brief   : Tests of the central and eccentric vertex facts of H(r, d)
#
# author  : radmax contributors
# created : 2026-10-19 09:14:52
# changed : 2026-10-19 11:37:05
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
import json
import unittest

from radmax.constructions import x_label
from radmax.exceptions import InfeasibleParametersError
from radmax.maximality import WitnessFact, WitnessReport, verify_H_witnesses

from helpers import feasible_pairs


class VerifyHWitnessesTest(unittest.TestCase):

    def assertFacts(self, report, expected):
        self.assertEqual([(f.key, f.description) for f in report.facts], expected)
        self.assertTrue(report.passed, report.failed())

    def test_all_feasible_pairs(self):
        for r, d in feasible_pairs(8):
            report = verify_H_witnesses(r, d)
            self.assertTrue(report.passed, f"r={r} d={d}: {report.failed()}")
            keys = [f.key for f in report.facts]
            self.assertEqual(keys[:5], ["a", "b", "c", "d", "e"])
            self.assertEqual(keys[5:], [f"f{j}" for j in range(2, 2 * r - d + 1)])

    def test_h_3_4(self):
        # 2d-3r+1 = 0 wraps to x5
        self.assertFacts(
            verify_H_witnesses(3, 4),
            [
                ("a", "x2 is central and e(y3) = 4"),
                ("b", "x3 is central with unique eccentric vertex y1"),
                ("c", "x2 and x1 are central with unique eccentric vertex y2"),
                ("d", "x4 and x5 are central with unique eccentric vertex y3"),
                ("e", "x4 is not an eccentric vertex of any vertex"),
                ("f2", "x1 and x2 are central with unique eccentric vertex y2"),
            ],
        )

    def test_h_6_10(self):
        self.assertFacts(
            verify_H_witnesses(6, 10),
            [
                ("a", "x5 is central and e(y6) = 10"),
                ("b", "x6 is central with unique eccentric vertex y1"),
                ("c", "x5 and x4 are central with unique eccentric vertex y2"),
                ("d", "x7 and x3 are central with unique eccentric vertex y6"),
                ("e", "x10 is not an eccentric vertex of any vertex"),
                ("f2", "x4 and x5 are central with unique eccentric vertex y2"),
            ],
        )

    def test_wrapped_subscripts(self):
        self.assertEqual(x_label(2 * 4 - 3 * 3 + 1, 3), "x5")
        self.assertEqual(x_label(2 * 10 - 3 * 6 + 1, 6), "x3")

    def test_infeasible(self):
        for r, d in ((3, 3), (3, 5), (2, 3), (5, 4)):
            with self.assertRaises(InfeasibleParametersError):
                verify_H_witnesses(r, d)

    def test_report(self):
        report = verify_H_witnesses(5, 7)
        data = json.loads(report.to_json())
        self.assertEqual((data["r"], data["d"]), (5, 7))
        self.assertTrue(data["passed"])
        self.assertEqual(len(data["facts"]), len(report.facts))
        self.assertEqual(hash(report), hash(verify_H_witnesses(5, 7)))

    def test_failed_facts(self):
        report = WitnessReport(
            r=3,
            d=4,
            facts=(WitnessFact("a", "ok", True), WitnessFact("b", "broken", False)),
        )
        self.assertFalse(report.passed)
        self.assertEqual([f.key for f in report.failed()], ["b"])
