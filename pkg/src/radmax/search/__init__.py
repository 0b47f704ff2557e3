from .enumeration import enumerate_labeled, iter_masks, shard_prefixes
from .report import OrderCounts, SearchReport, Violation
from .search import (
    WitnessCollector,
    check_bound_all,
    check_bound_upto,
    constructed_witness,
    min_order_nonselfcentered,
    run_sharded,
    scan_order,
)
