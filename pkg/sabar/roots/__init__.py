"""Real algebraic numbers as Thom encodings."""

from sabar.roots.thom import (
    Order,
    ThomEncoding,
    approximate,
    compare,
    count_open,
    encode_roots,
    order_roots,
    rational_approx,
    separate,
    signs_at_root,
)

__all__ = [
    "Order",
    "ThomEncoding",
    "approximate",
    "compare",
    "count_open",
    "encode_roots",
    "order_roots",
    "rational_approx",
    "separate",
    "signs_at_root",
]
