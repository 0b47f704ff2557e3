#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : enumeration.py
# brief   : Labeled graph enumeration over upper-triangle edge masks
#
# author  : radmax contributors
# created : 2026-09-15 10:26:44
# changed : 2026-10-18 09:12:55
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
from typing import Callable, Iterator, List, Optional, TypeVar

from radmax import config
from radmax.exceptions import GraphError, OrderCapError

logger = logging.getLogger(__name__)

T = TypeVar("T")


# function definitions ########################################################
def mask_width(n: int) -> int:
    return n * (n - 1) // 2


def check_order(n: int) -> None:
    if n < 1:
        raise GraphError(f"order must be at least 1, got {n}")
    cap = config.search_max_order()
    if n > cap:
        raise OrderCapError(n, cap, what="enumeration order")


def prefix_width(n: int, shards: int) -> int:
    """
    Number of leading mask bits used to split the search into `shards`
    parts (at most the whole mask).
    """
    return min(mask_width(n), (shards - 1).bit_length())


def shard_prefixes(n: int, shards: int = 1, shard: int = 0) -> List[int]:
    """
    Prefixes (values of the top `prefix_width` mask bits) owned by one
    shard. Prefix p belongs to shard p mod `shards`, so the shards are
    disjoint and together cover every mask.
    """
    if shards < 1:
        raise ValueError(f"number of shards must be positive, got {shards}")
    if not 0 <= shard < shards:
        raise ValueError(f"shard index {shard} outside 0..{shards - 1}")
    return [p for p in range(1 << prefix_width(n, shards)) if p % shards == shard]


def iter_masks(n: int, shards: int = 1, shard: int = 0) -> Iterator[int]:
    """
    Iterator over the edge masks of every labeled graph on n vertices owned by the
    shard, in increasing order within each prefix.
    """
    check_order(n)
    low_bits = mask_width(n) - prefix_width(n, shards)
    prefixes = shard_prefixes(n, shards, shard)
    return (
        (p << low_bits) | low for p in prefixes for low in range(1 << low_bits)
    )


def enumerate_labeled(
    n: int,
    visitor: Optional[Callable[[int], T]] = None,
    shards: int = 1,
    shard: int = 0,
) -> Iterator[T]:
    """
    Visits every labeled simple graph on n vertices exactly once.

    :param      n:        The order.
    :type       n:        int
    :param      visitor:  Called with each edge mask (bit k is the pair
                          `pair_order(n)[k]`); the masks themselves are
                          yielded when omitted.
    :type       visitor:  Callable
    :param      shards:   Number of disjoint parts of the search space.
    :type       shards:   int
    :param      shard:    The part to visit.
    :type       shard:    int

    :returns:   The visitor results in enumeration order.
    :rtype:     Iterator

    :raises     OrderCapError:  If n exceeds the enumeration cap.
    """
    masks = iter_masks(n, shards, shard)
    if visitor is None:
        return masks
    return (visitor(mask) for mask in masks)
