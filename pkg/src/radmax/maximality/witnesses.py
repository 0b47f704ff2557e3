#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : witnesses.py
# brief   : Central/eccentric vertex facts of H(r, d, 3r-1)
#
# author  : radmax contributors
# created : 2026-09-12 08:51:03
# changed : 2026-10-17 16:20:14
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
from dataclasses import dataclass, field
from typing import List, Tuple

from radmax.constructions import build_H, x_label
from radmax.graphs import eccentric_vertex_map, eccentricity_profile


@dataclass(frozen=True)
class WitnessFact:
    key: str
    description: str
    passed: bool


@dataclass(frozen=True)
class WitnessReport:
    r: int
    d: int
    facts: Tuple[WitnessFact, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.facts)

    def failed(self) -> List[WitnessFact]:
        return [f for f in self.facts if not f.passed]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "passed": self.passed,
            "facts": [
                {"key": f.key, "description": f.description, "passed": f.passed}
                for f in self.facts
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


# function definitions ########################################################
def verify_H_witnesses(r: int, d: int) -> WitnessReport:
    """
    Checks the central / eccentric vertex facts on which the radial
    maximality of H(r, d, 3r-1) rests:

    (a) x_{d-r+1} is central and e(y_r) = d;
    (b) x_r is central with unique eccentric vertex y_1;
    (c) x_{r-1} and x_{r-2} are central with unique eccentric vertex y_2;
    (d) x_{r+1} and x_{2d-3r+1} are central with unique eccentric vertex y_r;
    (e) x_{2r-2} is not an eccentric vertex of any vertex;
    (f) for 2 <= j <= 2r-d, x_{r-2j+2} and x_{r-2j+3} are central with
        unique eccentric vertex y_j.

    Cycle subscripts are reduced modulo 2r-1.

    :raises     InfeasibleParametersError:  If (r, d) is infeasible.
    """
    h = build_H(r, d)
    g = h.graph
    profile = eccentricity_profile(g)
    eccentric = eccentric_vertex_map(g)

    def x(k: int) -> int:
        return h[x_label(k, r)]

    def y(j: int) -> int:
        return h[f"y{j}"]

    def central_unique(v: int, target: int) -> bool:
        return v in profile.center and eccentric[v] == frozenset({target})

    def name(k: int) -> str:
        return x_label(k, r)

    facts = [
        WitnessFact(
            "a",
            f"{name(d - r + 1)} is central and e(y{r}) = {d}",
            x(d - r + 1) in profile.center and profile.ecc[y(r)] == d,
        ),
        WitnessFact(
            "b",
            f"{name(r)} is central with unique eccentric vertex y1",
            central_unique(x(r), y(1)),
        ),
        WitnessFact(
            "c",
            f"{name(r - 1)} and {name(r - 2)} are central with unique "
            f"eccentric vertex y2",
            central_unique(x(r - 1), y(2)) and central_unique(x(r - 2), y(2)),
        ),
        WitnessFact(
            "d",
            f"{name(r + 1)} and {name(2 * d - 3 * r + 1)} are central with "
            f"unique eccentric vertex y{r}",
            central_unique(x(r + 1), y(r))
            and central_unique(x(2 * d - 3 * r + 1), y(r)),
        ),
        WitnessFact(
            "e",
            f"{name(2 * r - 2)} is not an eccentric vertex of any vertex",
            all(x(2 * r - 2) not in ecc for ecc in eccentric.values()),
        ),
    ]
    for j in range(2, 2 * r - d + 1):
        facts.append(
            WitnessFact(
                f"f{j}",
                f"{name(r - 2 * j + 2)} and {name(r - 2 * j + 3)} are central "
                f"with unique eccentric vertex y{j}",
                central_unique(x(r - 2 * j + 2), y(j))
                and central_unique(x(r - 2 * j + 3), y(j)),
            )
        )
    return WitnessReport(r=r, d=d, facts=tuple(facts))
