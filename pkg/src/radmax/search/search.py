#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : search.py
# brief   : Exhaustive checks of the radius/diameter bound and the minimum order
#
# author  : radmax contributors
# created : 2026-09-17 09:40:55
# changed : 2026-10-18 16:31:27
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
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor, as_completed
from functools import partial, reduce
from typing import Callable, Dict, List, Optional, Sequence

import networkx as nx

from radmax import config
from radmax.constructions import build_H
from radmax.exceptions import InfeasibleParametersError
from radmax.graphs import Graph, eccentricity_profile, to_graph6
from radmax.graphs.eccentricity import eccentricity_of, within
from radmax.graphs.graph import reached_from, rows_from_mask
from radmax.maximality import is_radially_maximal, radius_keeping_pair
from radmax.search.enumeration import check_order, enumerate_labeled
from radmax.search.report import OrderCounts, SearchReport, Violation, example_key

logger = logging.getLogger(__name__)

BOUND_TASK = "bound"
MIN_ORDER_TASK = "min_order"


class WitnessCollector:
    """
    Keeps one representative per isomorphism class and key. Candidates are
    bucketed by degree and eccentricity sequences and compared with
    `nx.is_isomorphic`; each new class is stored by its canonical graph6.
    """

    def __init__(self):
        self._buckets: Dict[tuple, List[nx.Graph]] = defaultdict(list)
        self.examples: Dict[str, List[str]] = defaultdict(list)

    def add(self, key: str, n: int, rows: Sequence[int], ecc: Sequence[int]) -> bool:
        degrees = [bin(row).count("1") for row in rows]
        invariant = (key, tuple(sorted(zip(degrees, ecc))))
        g = Graph._trusted(n, rows)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(g.edges())
        bucket = self._buckets[invariant]
        if any(nx.is_isomorphic(G, rep) for rep in bucket):
            return False
        bucket.append(G)
        canonical = Graph.from_mask(n, g.canonical_mask())
        self.examples[key].append(to_graph6(canonical))
        logger.debug("new class %s: %s", key, self.examples[key][-1])
        return True

    def sorted_examples(self) -> Dict[str, List[str]]:
        return {k: sorted(self.examples[k]) for k in sorted(self.examples)}


# function definitions ########################################################
def _dominated(rows: Sequence[int], full: int) -> bool:
    return any(row | (1 << v) == full for v, row in enumerate(rows))


def scan_order(
    n: int,
    task: str = BOUND_TASK,
    radius: Optional[int] = None,
    shards: int = 1,
    shard: int = 0,
    collect_witnesses: bool = True,
) -> SearchReport:
    """
    Scans one shard of the labeled graphs of order n.

    Filters run cheapest first: connectivity, then radius (radius 1 graphs
    are never radially maximal; with `radius` set any other radius is
    skipped), then the maximality check.

    `task` selects the claim checked on every radially maximal graph found:
    `bound` checks r <= d <= 2r-2, `min_order` checks that no
    non-self-centered one of radius r has order below 3r-1.
    """
    if task not in (BOUND_TASK, MIN_ORDER_TASK):
        raise ValueError(f"unknown search task {task!r}")
    full = (1 << n) - 1
    counts = OrderCounts(order=n)
    collector = WitnessCollector()
    violations = []

    for mask in enumerate_labeled(n, shards=shards, shard=shard):
        counts.graphs += 1
        rows = rows_from_mask(n, mask)
        if reached_from(rows, 0) != full:
            continue
        counts.connected += 1
        if _dominated(rows, full):
            continue
        if radius is not None and any(within(rows, v, radius - 1, full) for v in range(n)):
            continue
        ecc = [eccentricity_of(rows, v, full) for v in range(n)]
        r, d = min(ecc), max(ecc)
        if radius is not None and r != radius:
            continue
        if radius_keeping_pair(rows, r, full) is not None:
            continue

        counts.record(r, d)
        claim = None
        if task == BOUND_TASK and not r <= d <= 2 * r - 2:
            claim = "r <= d <= 2r-2"
        elif task == MIN_ORDER_TASK and r != d and n < 3 * r - 1:
            claim = "order >= 3r-1"
        if claim is not None:
            g6 = to_graph6(Graph._trusted(n, rows))
            logger.warning("violation of %s at order %d: %s", claim, n, g6)
            violations.append(Violation(n, g6, r, d, claim))
        if collect_witnesses and (task == BOUND_TASK or r != d):
            collector.add(example_key(n, r, d), n, rows, ecc)

    logger.info(
        "order %d shard %d/%d: %d graphs, %d connected, %d radially maximal",
        n, shard, shards, counts.graphs, counts.connected, counts.radially_maximal,
    )
    return SearchReport(
        task=task,
        radius=radius,
        shards=shards,
        shard_ids=[shard],
        counts={n: counts},
        extremal_examples=collector.sorted_examples(),
        violations=sorted(violations),
    )


def run_sharded(
    scan: Callable[..., SearchReport],
    shards: int,
    workers: Optional[int] = None,
) -> SearchReport:
    """
    Runs `scan(shards=shards, shard=i)` for every shard in a process pool
    and merges the reports.
    """
    if shards == 1:
        return scan(shards=1, shard=0)
    workers = workers or config.workers()
    reports = []
    with ProcessPoolExecutor(max_workers=min(workers, shards)) as ex:
        futures = {ex.submit(scan, shards=shards, shard=i): i for i in range(shards)}
        for future in as_completed(futures):
            reports.append(future.result())
            logger.info("shard %d/%d done", futures[future], shards)
    return reduce(SearchReport.merge, sorted(reports, key=lambda r: r.shard_ids))


def _scan(
    n: int,
    task: str,
    radius: Optional[int],
    shards: int,
    shard: Optional[int],
    workers: Optional[int],
    collect_witnesses: bool,
) -> SearchReport:
    scan = partial(
        scan_order, n, task=task, radius=radius, collect_witnesses=collect_witnesses
    )
    if shard is None:
        return run_sharded(scan, shards, workers)
    return scan(shards=shards, shard=shard)


def check_bound_all(
    n: int,
    shards: int = 1,
    shard: Optional[int] = None,
    workers: Optional[int] = None,
    collect_witnesses: bool = True,
) -> SearchReport:
    """
    Checks r <= d <= 2r-2 on every radially maximal labeled graph of order
    n. The report also counts graphs with d = 2r-1 and d = 2r
    (`diameter_excess`), which must stay zero.

    :param      n:        The order.
    :type       n:        int
    :param      shards:   Number of parts the search space is split into.
    :type       shards:   int
    :param      shard:    Only scan this part; all parts run in a process
                          pool when None.
    :type       shard:    int
    :param      workers:  Process count (defaults to `config.workers()`).
    :type       workers:  int

    :returns:   The report; `violations` lists every counterexample.
    :rtype:     SearchReport

    :raises     OrderCapError:  If n exceeds the enumeration cap.
    """
    check_order(n)
    return _scan(n, BOUND_TASK, None, shards, shard, workers, collect_witnesses)


def check_bound_upto(n_max: int, **kwargs) -> SearchReport:
    check_order(n_max)
    return reduce(
        SearchReport.merge, (check_bound_all(n, **kwargs) for n in range(1, n_max + 1))
    )


def constructed_witness(r: int) -> dict:
    """
    H(r, r+1, 3r-1) checked as a non-self-centered radially maximal graph
    of radius r and order 3r-1.
    """
    h = build_H(r, r + 1).graph
    profile = eccentricity_profile(h)
    accepted = (
        profile.radius == r
        and not profile.self_centered
        and is_radially_maximal(h)
    )
    return {
        "graph6": to_graph6(h),
        "order": h.n,
        "radius": profile.radius,
        "diameter": profile.diameter,
        "radially_maximal": accepted,
    }


def min_order_nonselfcentered(
    r: int,
    n_max: int,
    shards: int = 1,
    shard: Optional[int] = None,
    workers: Optional[int] = None,
    collect_witnesses: bool = True,
) -> SearchReport:
    """
    Counts non-self-centered radially maximal graphs of radius r at every
    order up to n_max. None is expected below 3r-1; H(r, r+1, 3r-1) is
    attached as the witness of order 3r-1 whether or not the enumeration
    reaches it.

    :raises     InfeasibleParametersError:  If r < 3.
    :raises     OrderCapError:              If n_max exceeds the cap.
    """
    if r < 3:
        raise InfeasibleParametersError(
            f"r={r} < 3: non-self-centered radially maximal graphs have "
            f"radius at least 3",
            inequality="r >= 3",
        )
    check_order(n_max)
    report = reduce(
        SearchReport.merge,
        (
            _scan(n, MIN_ORDER_TASK, r, shards, shard, workers, collect_witnesses)
            for n in range(1, n_max + 1)
        ),
    )
    witness = constructed_witness(r)
    report.constructed_witness = witness
    if not witness["radially_maximal"]:
        report.violations.append(
            Violation(
                witness["order"],
                witness["graph6"],
                witness["radius"],
                witness["diameter"],
                "constructed witness is radially maximal",
            )
        )
    return report
