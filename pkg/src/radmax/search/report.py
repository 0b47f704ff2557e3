#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : report.py
# brief   : Mergeable search reports
#
# author  : radmax contributors
# created : 2026-09-16 14:03:38
# changed : 2026-10-18 11:47:09
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
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

EXCESS_KEYS = ("2r-1", "2r")


@dataclass
class OrderCounts:
    """
    Counts collected over the labeled graphs of one order.
    """

    order: int
    graphs: int = 0
    connected: int = 0
    radially_maximal: int = 0
    by_radius_diameter: Counter = field(default_factory=Counter)
    non_self_centered_by_radius: Counter = field(default_factory=Counter)
    diameter_excess: Counter = field(default_factory=Counter)

    def record(self, radius: int, diameter: int) -> None:
        """Registers one radially maximal graph."""
        self.radially_maximal += 1
        self.by_radius_diameter[(radius, diameter)] += 1
        if radius != diameter:
            self.non_self_centered_by_radius[radius] += 1
        if diameter == 2 * radius - 1:
            self.diameter_excess["2r-1"] += 1
        elif diameter == 2 * radius:
            self.diameter_excess["2r"] += 1

    def merge(self, other: "OrderCounts") -> "OrderCounts":
        if other.order != self.order:
            raise ValueError(f"cannot merge counts of orders {self.order} and {other.order}")
        return OrderCounts(
            order=self.order,
            graphs=self.graphs + other.graphs,
            connected=self.connected + other.connected,
            radially_maximal=self.radially_maximal + other.radially_maximal,
            by_radius_diameter=self.by_radius_diameter + other.by_radius_diameter,
            non_self_centered_by_radius=(
                self.non_self_centered_by_radius + other.non_self_centered_by_radius
            ),
            diameter_excess=self.diameter_excess + other.diameter_excess,
        )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "graphs": self.graphs,
            "connected": self.connected,
            "radially_maximal": self.radially_maximal,
            "by_radius_diameter": {
                f"{r},{d}": c for (r, d), c in sorted(self.by_radius_diameter.items())
            },
            "non_self_centered_by_radius": {
                str(r): c for r, c in sorted(self.non_self_centered_by_radius.items())
            },
            "diameter_excess": {k: self.diameter_excess[k] for k in EXCESS_KEYS},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OrderCounts":
        def pair(key: str) -> Tuple[int, int]:
            r, d = key.split(",")
            return int(r), int(d)

        return cls(
            order=int(data["order"]),
            graphs=int(data["graphs"]),
            connected=int(data["connected"]),
            radially_maximal=int(data["radially_maximal"]),
            by_radius_diameter=Counter(
                {pair(k): int(v) for k, v in data["by_radius_diameter"].items()}
            ),
            non_self_centered_by_radius=Counter(
                {int(k): int(v) for k, v in data["non_self_centered_by_radius"].items()}
            ),
            diameter_excess=Counter(
                {k: int(v) for k, v in data["diameter_excess"].items() if int(v)}
            ),
        )


@dataclass(frozen=True, order=True)
class Violation:
    order: int
    graph6: str
    radius: int
    diameter: int
    claim: str

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "graph6": self.graph6,
            "radius": self.radius,
            "diameter": self.diameter,
            "claim": self.claim,
        }


def example_key(order: int, radius: int, diameter: int) -> str:
    return f"n={order},r={radius},d={diameter}"


@dataclass
class SearchReport:
    """
    Outcome of an exhaustive search. Reports of disjoint shards (or of
    different orders) combine with `merge`, which is associative and
    commutative; examples and violations are kept sorted.

    `extremal_examples` maps `n=..,r=..,d=..` to the canonical graph6
    strings of the isomorphism classes found.
    """

    task: str
    radius: Optional[int] = None
    shards: int = 1
    shard_ids: List[int] = field(default_factory=list)
    counts: Dict[int, OrderCounts] = field(default_factory=dict)
    extremal_examples: Dict[str, List[str]] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    constructed_witness: Optional[dict] = None

    @property
    def orders(self) -> List[int]:
        return sorted(self.counts)

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def minimum_order_found(self) -> Optional[int]:
        """
        Smallest searched order with a non-self-centered radially maximal
        graph (of the target radius, if the report has one).
        """
        for n in self.orders:
            by_radius = self.counts[n].non_self_centered_by_radius
            if self.radius is None and sum(by_radius.values()):
                return n
            if self.radius is not None and by_radius[self.radius]:
                return n
        return None

    def merge(self, other: "SearchReport") -> "SearchReport":
        if (self.task, self.radius, self.shards) != (other.task, other.radius, other.shards):
            raise ValueError(
                f"cannot merge {self.task}/r={self.radius}/{self.shards} shards "
                f"with {other.task}/r={other.radius}/{other.shards} shards"
            )
        counts = dict(self.counts)
        for n, c in other.counts.items():
            counts[n] = counts[n].merge(c) if n in counts else c
        examples = {k: set(v) for k, v in self.extremal_examples.items()}
        for k, v in other.extremal_examples.items():
            examples.setdefault(k, set()).update(v)
        return SearchReport(
            task=self.task,
            radius=self.radius,
            shards=self.shards,
            shard_ids=sorted(set(self.shard_ids) | set(other.shard_ids)),
            counts=dict(sorted(counts.items())),
            extremal_examples={k: sorted(examples[k]) for k in sorted(examples)},
            violations=sorted(set(self.violations) | set(other.violations)),
            constructed_witness=self.constructed_witness or other.constructed_witness,
        )

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "radius": self.radius,
            "shards": self.shards,
            "shard_ids": list(self.shard_ids),
            "orders": self.orders,
            "holds": self.holds,
            "minimum_order_found": self.minimum_order_found,
            "counts": [self.counts[n].to_dict() for n in self.orders],
            "extremal_examples": self.extremal_examples,
            "violations": [v.to_dict() for v in self.violations],
            "constructed_witness": self.constructed_witness,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "SearchReport":
        return cls(
            task=data["task"],
            radius=data.get("radius"),
            shards=int(data.get("shards", 1)),
            shard_ids=list(data.get("shard_ids", [])),
            counts={c["order"]: OrderCounts.from_dict(c) for c in data["counts"]},
            extremal_examples={
                k: list(v) for k, v in data.get("extremal_examples", {}).items()
            },
            violations=[Violation(**v) for v in data.get("violations", [])],
            constructed_witness=data.get("constructed_witness"),
        )
