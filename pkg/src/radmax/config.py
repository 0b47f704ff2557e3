#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : config.py
# brief   : Environment driven settings
#
# author  : radmax contributors
# created : 2026-09-02 10:30:02
# changed : 2026-10-11 09:41:57
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
import os

logger = logging.getLogger(__name__)

# default values ##############################################################
DEFAULT_MAX_ORDER = 512
DEFAULT_SEARCH_MAX_ORDER = 8

MAX_ORDER_ENV = "RADMAX_MAX_ORDER"
SEARCH_MAX_ORDER_ENV = "RADMAX_SEARCH_MAX_ORDER"
WORKERS_ENV = "RADMAX_WORKERS"

_overrides = {}


# function definitions ########################################################
def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return default
    if value < 1:
        logger.warning("ignoring %s=%r: must be positive", name, raw)
        return default
    return value


def max_order() -> int:
    """
    Largest graph order accepted by `radmax.graphs.Graph`.

    :returns:   The order cap (`RADMAX_MAX_ORDER`, default 512).
    :rtype:     int
    """
    if MAX_ORDER_ENV in _overrides:
        return _overrides[MAX_ORDER_ENV]
    return _int_from_env(MAX_ORDER_ENV, DEFAULT_MAX_ORDER)


def search_max_order() -> int:
    """
    Largest order the exhaustive enumeration accepts
    (`RADMAX_SEARCH_MAX_ORDER`, default 8).
    """
    if SEARCH_MAX_ORDER_ENV in _overrides:
        return _overrides[SEARCH_MAX_ORDER_ENV]
    return _int_from_env(SEARCH_MAX_ORDER_ENV, DEFAULT_SEARCH_MAX_ORDER)


def workers() -> int:
    return _int_from_env(WORKERS_ENV, os.cpu_count() or 1)


def set_max_order(value: int) -> None:
    """
    Override the order cap for the running process (used by the CLI's
    `--max-order` flag).
    """
    if value < 1:
        raise ValueError(f"order cap must be positive, got {value}")
    _overrides[MAX_ORDER_ENV] = value


def reset() -> None:
    _overrides.clear()
