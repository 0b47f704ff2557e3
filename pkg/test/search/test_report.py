#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : test_report.py
# brief   : Tests of search report merging and serialization
#
# author  : radmax contributors
# created : 2026-09-15 14:27:50
# changed : 2026-10-12 10:08:33
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
from collections import Counter

from radmax.search import OrderCounts, SearchReport, Violation
from radmax.search.report import example_key


def counts(order, rm):
    c = OrderCounts(order=order, graphs=10 * len(rm), connected=5 * len(rm))
    for r, d in rm:
        c.record(r, d)
    return c


def report(shard, order, rm, examples=None, violations=()):
    return SearchReport(
        task="bound",
        shards=3,
        shard_ids=[shard],
        counts={order: counts(order, rm)},
        extremal_examples=examples or {},
        violations=list(violations),
    )


class OrderCountsTest(unittest.TestCase):

    def test_record(self):
        c = counts(9, [(3, 3), (3, 4), (4, 6), (3, 5), (3, 6)])
        self.assertEqual(c.radially_maximal, 5)
        self.assertEqual(c.by_radius_diameter[(3, 4)], 1)
        self.assertEqual(c.non_self_centered_by_radius, Counter({3: 3, 4: 1}))
        self.assertEqual(c.diameter_excess, Counter({"2r-1": 1, "2r": 1}))

    def test_dict_round_trip(self):
        c = counts(8, [(3, 3), (3, 4), (3, 4)])
        d = json.loads(json.dumps(c.to_dict()))
        self.assertEqual(d["diameter_excess"], {"2r-1": 0, "2r": 0})
        self.assertEqual(d["by_radius_diameter"], {"3,3": 1, "3,4": 2})
        self.assertEqual(OrderCounts.from_dict(d), c)

    def test_merge_orders_must_match(self):
        with self.assertRaises(ValueError):
            counts(4, []).merge(counts(5, []))


class SearchReportTest(unittest.TestCase):

    def setUp(self):
        v = Violation(6, "E?~o", 2, 4, "r <= d <= 2r-2")
        self.a = report(0, 6, [(2, 2)], {example_key(6, 2, 2): ["E]~o"]})
        self.b = report(1, 6, [(3, 3), (2, 2)], {example_key(6, 2, 2): ["E?~o", "E]~o"]}, [v])
        self.c = report(2, 7, [(3, 4)], {example_key(7, 3, 4): ["F?~v_"]})

    def test_merge_commutative(self):
        self.assertEqual(self.a.merge(self.b), self.b.merge(self.a))

    def test_merge_associative(self):
        self.assertEqual(
            self.a.merge(self.b).merge(self.c), self.a.merge(self.b.merge(self.c))
        )

    def test_merge_contents(self):
        m = self.a.merge(self.b).merge(self.c)
        self.assertEqual(m.orders, [6, 7])
        self.assertEqual(m.shard_ids, [0, 1, 2])
        self.assertEqual(m.counts[6].radially_maximal, 3)
        self.assertEqual(m.extremal_examples[example_key(6, 2, 2)], ["E?~o", "E]~o"])
        self.assertFalse(m.holds)
        self.assertEqual(m.minimum_order_found, 7)

    def test_merge_mismatch(self):
        other = SearchReport(task="min_order", radius=3, shards=3)
        with self.assertRaises(ValueError):
            self.a.merge(other)

    def test_dict_round_trip(self):
        m = self.a.merge(self.b).merge(self.c)
        data = json.loads(m.to_json())
        self.assertEqual(SearchReport.from_dict(data), m)
        self.assertEqual(data["minimum_order_found"], 7)
        self.assertFalse(data["holds"])

    def test_minimum_order_with_radius(self):
        r = SearchReport(task="min_order", radius=4, counts={8: counts(8, [(3, 4)])})
        self.assertIsNone(r.minimum_order_found)
        r = SearchReport(task="min_order", radius=3, counts={8: counts(8, [(3, 4)])})
        self.assertEqual(r.minimum_order_found, 8)
