import sys
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd

FORMATS = ("text", "records")


def records_text(rows: List[Dict[str, Any]]) -> str:
    """One JSON object per row, one row per line"""
    if not rows:
        return ""
    frame = pd.DataFrame(rows, dtype=object)
    text = frame.to_json(orient="records", lines=True)
    return text if text.endswith("\n") else text + "\n"


def emit(fmt: str, lines: List[str], rows: List[Dict[str, Any]], stream: Optional[TextIO] = None):
    """Write results to stdout as plain lines or as JSON records"""
    stream = stream or sys.stdout
    if fmt == "records":
        stream.write(records_text(rows))
    else:
        for line in lines:
            stream.write(line + "\n")
