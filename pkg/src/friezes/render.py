"""Text, JSON and CSV renderings of pattern windows.

The grid layout staggers row i by i half-steps, matching the usual frieze
displays; for type A input the border rows of 1's (friezes) or 0's
(Y-friezes) can be added.  The JSON form is loss-free: parsing it back and
re-verifying succeeds for every successful run.
"""

from __future__ import annotations

import json

from .cartan import validate_cartan
from .frieze import PatternWindow
from .semiring import get_semiring


def grid_text(window, border=False):
    S = window.semiring
    r = window.cartan.rank
    lo, hi = window.cols
    cells = {}
    for i in range(1, r + 1):
        for m in range(lo, hi + 1):
            cells[(i, m)] = S.render(window.value(i, m))
    if border:
        fill = "1" if window.kind == "frieze" else "0"
        for m in range(lo, hi + 2):
            cells[(0, m)] = fill
            cells[(r + 1, m)] = fill
    width = max(len(s) for s in cells.values())
    half = (width + 2 + 1) // 2
    lines = []
    rows = range(0, r + 2) if border else range(1, r + 1)
    for i in rows:
        line = []
        for m in range(lo, hi + 2):
            if (i, m) not in cells:
                continue
            start = (2 * (m - lo) + (i - 1) + 1) * half
            pad = start - len("".join(line))
            if pad > 0:
                line.append(" " * pad)
            line.append(cells[(i, m)].center(width))
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


def window_to_dict(window):
    S = window.semiring
    return {
        "kind": window.kind,
        "cartan": {"entries": [list(row) for row in window.cartan.entries],
                   "label": window.cartan.label},
        "semiring": S.id,
        "cols": [window.m_lo, window.m_hi],
        "rows": [[S.to_json(v) for v in row] for row in window.values],
        "period": window.period,
    }


def window_to_json(window, indent=None):
    return json.dumps(window_to_dict(window), indent=indent)


def window_from_dict(data):
    cartan = validate_cartan(data["cartan"]["entries"], data["cartan"].get("label"))
    sid = data["semiring"]
    S = get_semiring(sid, nvars=cartan.rank) if sid == "universal" else get_semiring(sid)
    lo, hi = data["cols"]
    rows = tuple(tuple(S.from_json(v) for v in row) for row in data["rows"])
    if len(rows) != cartan.rank or any(len(row) != hi - lo + 1 for row in rows):
        raise ValueError("row data does not match the declared window")
    return PatternWindow(data["kind"], cartan, S, lo, hi, rows, data.get("period"))


def window_from_json(text):
    return window_from_dict(json.loads(text))


def window_csv(window):
    S = window.semiring
    lines = ["row,col,value"]
    for i in range(1, window.cartan.rank + 1):
        for m in range(window.m_lo, window.m_hi + 1):
            lines.append(f"{i},{m},{S.render(window.value(i, m))}")
    return "\n".join(lines) + "\n"


def region_csv(samples):
    lines = ["x,y,inside"]
    for x, y, inside in samples:
        lines.append(f"{x},{y},{inside}")
    return "\n".join(lines) + "\n"
