"""File formats, barcode emitters and CLI run settings."""

from sabar.io.export import barcode_records, emit_barcode_json, emit_barcode_svg
from sabar.io.formats import (
    parse_rational,
    read_barcode_json,
    read_filtration,
    read_points,
    write_filtration,
)
from sabar.io.run_config import RunConfig

__all__ = [
    "RunConfig",
    "barcode_records",
    "emit_barcode_json",
    "emit_barcode_svg",
    "parse_rational",
    "read_barcode_json",
    "read_filtration",
    "read_points",
    "write_filtration",
]
