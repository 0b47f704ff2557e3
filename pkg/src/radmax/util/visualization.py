#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : visualization.py
# brief   : DOT renderings of constructions and eccentricity profiles
#
# author  : radmax contributors
# created : 2026-09-19 11:17:30
# changed : 2026-10-12 13:05:51
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
from typing import Dict, Mapping, Optional

from radmax.constructions import LabeledConstruction
from radmax.graphs import Graph, eccentricity_profile, to_dot


# function definitions ########################################################
def _node_style(name: Optional[str], ecc, central: bool) -> Dict[str, str]:
    label = f"{name}\\ne={ecc}" if name else f"e={ecc}"
    style = {"label": label}
    if name and name.startswith("y"):
        style["shape"] = "box"
    if name and "'" in name:
        style["style"] = "dashed"
    if central:
        style["style"] = ",".join(filter(None, [style.get("style"), "filled"]))
        style["fillcolor"] = "lightgrey"
    return style


def profile_dot(
    g: Graph,
    names: Optional[Mapping[int, str]] = None,
    name: str = "G",
) -> str:
    """
    DOT rendering with every vertex labeled by its eccentricity (and name,
    if given); central vertices are filled.
    """
    names = names or {}
    profile = eccentricity_profile(g)
    node_attrs = {
        v: _node_style(names.get(v), profile.ecc[v], v in profile.center)
        for v in range(g.n)
    }
    return to_dot(g, name=name, node_attrs=node_attrs)


def construction_dot(c: LabeledConstruction, name: str = "G") -> str:
    """
    DOT rendering of a construction: cycle vertices as ellipses, attached
    y-vertices as boxes, extension copies dashed, the center filled.
    """
    return profile_dot(c.graph, names=c.names(), name=name)
