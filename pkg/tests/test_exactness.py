"""Arithmetic stays rational: no float literals or conversions outside plotting."""

import tokenize
from pathlib import Path

import sabar

PACKAGE = Path(sabar.__file__).parent
PLOTTING = {PACKAGE / "io" / "export.py"}


def _float_tokens(path: Path) -> list[str]:
    found = []
    with open(path, "rb") as f:
        for tok in tokenize.tokenize(f.readline):
            if tok.type == tokenize.NAME and tok.string == "float":
                found.append(f"{path.name}:{tok.start[0]}: float")
            elif tok.type == tokenize.NUMBER and not tok.string.lower().startswith("0x"):
                if any(c in tok.string.lower() for c in ".e"):
                    found.append(f"{path.name}:{tok.start[0]}: {tok.string}")
    return found


def test_no_floats_in_arithmetic():
    sources = [p for p in sorted(PACKAGE.rglob("*.py")) if p not in PLOTTING]
    assert sources
    found = [hit for p in sources for hit in _float_tokens(p)]
    assert found == []
