"""JSON and SVG renderings of barcodes, byte-identical for identical input."""

from __future__ import annotations

import io
from collections.abc import Sequence
from typing import Any

import orjson

from sabar.persistence.filtration import Bar, Barcode
from sabar.persistence.values import (
    Algebraic,
    Exact,
    FiltrationValue,
    Index,
    MinusInfinity,
    PlusInfinity,
    value_to_json,
)

SVG_HASH_SALT = "sabar"


def _ordered(barcodes: Sequence[Barcode]) -> list[tuple[int, Bar]]:
    return [(b.p, bar) for b in sorted(barcodes, key=lambda b: b.p) for bar in b.bars_sorted()]


def barcode_records(barcodes: Sequence[Barcode]) -> list[dict[str, Any]]:
    return [
        {
            "p": b.p,
            "bars": [
                {
                    "birth": value_to_json(bar.birth),
                    "death": value_to_json(bar.death),
                    "mult": bar.mult,
                }
                for bar in b.bars_sorted()
            ],
        }
        for b in sorted(barcodes, key=lambda b: b.p)
    ]


def emit_barcode_json(barcodes: Sequence[Barcode]) -> bytes:
    return orjson.dumps(
        barcode_records(barcodes), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS
    )


def _position(v: FiltrationValue) -> float | None:
    """Plot coordinate of a finite value; display only."""
    if isinstance(v, Index):
        return float(v.i)
    if isinstance(v, Exact):
        return float(v.value)
    if isinstance(v, Algebraic):
        lo, hi = v.approx
        return float((lo + hi) / 2)
    if isinstance(v, (MinusInfinity, PlusInfinity)):
        return None
    raise TypeError(f"unexpected filtration value {v!r}")


def emit_barcode_svg(barcodes: Sequence[Barcode]) -> bytes:
    """Horizontal bar plot, one row per bar grouped by dimension.

    Bars that never die run to the right margin and end in an arrowhead.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = _ordered(barcodes)
    finite = [
        x
        for _, bar in rows
        for x in (_position(bar.birth), _position(bar.death))
        if x is not None
    ]
    lo = min(finite, default=0.0)
    hi = max(finite, default=1.0)
    pad = (hi - lo) * 0.1 or 1.0
    left, right = lo - pad, hi + pad

    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6.0, 0.4 * max(len(rows), 1) + 1.2))
        colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
        labels = []
        for row, (p, bar) in enumerate(rows):
            y = len(rows) - 1 - row
            start = _position(bar.birth)
            start = left if start is None else start
            end = _position(bar.death)
            color = colors[p % len(colors)]
            if end is None:
                ax.plot([start, right - pad / 2], [y, y], color=color, linewidth=2)
                ax.annotate(
                    "",
                    xy=(right, y),
                    xytext=(right - pad / 2, y),
                    arrowprops={"arrowstyle": "->", "color": color, "linewidth": 2},
                )
            else:
                ax.plot([start, end], [y, y], color=color, linewidth=2)
            labels.append(f"H{p}" + (f" x{bar.mult}" if bar.mult > 1 else ""))
        ax.set_xlim(left, right)
        ax.set_ylim(-1, max(len(rows), 1))
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels(list(reversed(labels)))
        ax.set_xlabel("filtration value")
        ax.set_title("Barcode")
        fig.tight_layout()
        buffer = io.BytesIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buffer.getvalue()
