#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : exceptions.py
# brief   : Exception hierarchy of the radmax package
#
# author  : radmax contributors
# created : 2026-09-02 10:12:40
# changed : 2026-10-14 17:03:11
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
from typing import Optional, Tuple


class RadmaxError(Exception):
    """
    Base class of all errors raised by radmax.
    """


class GraphError(RadmaxError, ValueError):
    """
    Invalid graph or invalid request on a graph (vertex out of range,
    self-loop, duplicate edge, ...).
    """


class OrderCapError(GraphError):
    """
    The requested order exceeds the configured cap.
    """

    def __init__(self, order: int, cap: int, what: str = "graph order"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} {order} exceeds the configured cap {cap}")


class DisconnectedGraphError(GraphError):
    """
    The operation requires a connected graph (finite radius).
    """

    def __init__(self, message: str = "graph is disconnected; radius is infinite"):
        super().__init__(message)


class FormatError(GraphError):
    """
    Input could not be parsed as graph6, edge list or DOT.
    """


class InfeasibleParametersError(RadmaxError, ValueError):
    """
    A (radius, diameter, order) request that no radially maximal graph can
    satisfy. `inequality` names the violated condition.
    """

    def __init__(self, message: str, inequality: str):
        self.inequality = inequality
        super().__init__(message)


class UnsupportedOrderError(InfeasibleParametersError):
    """
    The order lies below the floor the constructions start from (2r for
    self-centered graphs, 3r-1 otherwise).
    """

    def __init__(self, message: str, floor: int):
        self.floor = floor
        super().__init__(message, inequality=f"n >= {floor}")


class NotRadiallyMaximalError(RadmaxError):
    """
    Raised when a certificate is requested for a graph that is not radially
    maximal. `edge` is a non-edge whose addition keeps the radius, or None
    for complete graphs.
    """

    def __init__(self, message: str, edge: Optional[Tuple[int, int]] = None):
        self.edge = edge
        super().__init__(message)
