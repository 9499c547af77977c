"""The network file format, plus text rendering of reports and motif sets.

A network document is plain text, one network per document:

    netmet-network 1
    nodes 2
    p
    q
    weights
    1.0 2.0
    3.0 4.0

After the header come exactly n label lines (one per node, stripped,
nonempty, distinct), the literal line "weights", and then n^2 decimal
literals in row-major order split across lines however the writer likes.
The writer renders floats with shortest-round-trip precision, so
serialize -> parse is bit-exact.  NaN and infinities are rejected.
"""

from __future__ import annotations

from .correspondence import Correspondence
from .distance import DistanceReport
from .errors import ParseError
from .motifs import MotifSet
from .network import Network

FORMAT_MAGIC = "netmet-network"
FORMAT_VERSION = 1


def serialize_network(net: Network) -> str:
    lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION}", f"nodes {net.n}"]
    lines.extend(net.labels)
    lines.append("weights")
    for row in net.weights:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def _parse_header_int(parts: list[str], keyword: str, line_no: int) -> int:
    if len(parts) != 2 or parts[0] != keyword:
        raise ParseError(f"expected '{keyword} <integer>'", line_no, 1)
    try:
        value = int(parts[1])
    except ValueError:
        raise ParseError(f"'{parts[1]}' is not an integer", line_no, len(keyword) + 2) from None
    return value


def parse_network(text: str) -> Network:
    """Parse one network document; errors carry the offending line/column."""
    lines = text.splitlines()
    pos = 0

    def next_content_line() -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines):
            pos += 1
            stripped = lines[pos - 1].strip()
            if stripped:
                return pos, stripped
        raise ParseError("unexpected end of document", len(lines) or 1)

    line_no, header = next_content_line()
    parts = header.split()
    if len(parts) != 2 or parts[0] != FORMAT_MAGIC:
        raise ParseError(f"expected header '{FORMAT_MAGIC} {FORMAT_VERSION}'", line_no, 1)
    if parts[1] != str(FORMAT_VERSION):
        raise ParseError(f"unsupported format version '{parts[1]}' (expected {FORMAT_VERSION})",
                         line_no, len(FORMAT_MAGIC) + 2)

    line_no, count_line = next_content_line()
    n = _parse_header_int(count_line.split(), "nodes", line_no)
    if n < 1:
        raise ParseError(f"node count must be at least 1, got {n}", line_no, 7)

    labels = []
    seen = set()
    for _ in range(n):
        line_no, label = next_content_line()
        if label == "weights":
            raise ParseError(f"expected {n} label lines, found the 'weights' marker after {len(labels)}",
                             line_no, 1)
        if label in seen:
            raise ParseError(f"duplicate node label '{label}'", line_no, 1)
        seen.add(label)
        labels.append(label)

    line_no, marker = next_content_line()
    if marker != "weights":
        raise ParseError("expected the 'weights' marker after the label lines", line_no, 1)

    expected = n * n
    values = []
    while pos < len(lines):
        pos += 1
        raw = lines[pos - 1]
        column = 1
        for token in raw.split():
            column = raw.index(token, column - 1) + 1
            try:
                value = float(token)
            except ValueError:
                raise ParseError(f"'{token}' is not a decimal literal", pos, column) from None
            if value != value or value in (float("inf"), float("-inf")):
                raise ParseError(f"weight '{token}' is not finite", pos, column)
            if len(values) == expected:
                raise ParseError(f"expected {expected} weights, found extra value '{token}'", pos, column)
            values.append(value)
            column += len(token)
    if len(values) != expected:
        raise ParseError(f"expected {expected} weights, got {len(values)}", len(lines) or 1)
    weights = [values[i * n : (i + 1) * n] for i in range(n)]
    return Network(tuple(labels), weights)


def format_float(value: float) -> str:
    return repr(float(value))


def render_correspondence(rel: Correspondence) -> str:
    return " ".join(f"{i}:{j}" for i, j in rel.pairs)


def render_distance_report(report: DistanceReport, left: Network, right: Network,
                           left_name: str = "left", right_name: str = "right") -> str:
    """Flat key-value report with a stable key order.

    Everything above the 'timings' marker is deterministic for identical
    inputs and flags; wall-clock values are quarantined below it.
    """
    out = ["netmet-report 1",
           f"left {left_name}",
           f"right {right_name}",
           f"left-nodes {left.n}",
           f"right-nodes {right.n}"]
    for entry in report.lower_bounds:
        out.append(f"lower {entry.method} {format_float(entry.value)}")
    for entry in report.upper_bounds:
        out.append(f"upper {entry.method} {format_float(entry.value)}")
    if report.exact is not None:
        value, witness = report.exact
        out.append(f"exact {format_float(value)}")
        out.append(f"witness {render_correspondence(witness)}")
    for method, reason in report.skipped:
        out.append(f"skipped {method} {reason}")
    out.append(f"best-lower {format_float(report.best_lower)}")
    out.append(f"best-upper {format_float(report.best_upper)}")
    out.append("timings")
    for method, seconds in report.timings:
        out.append(f"{method} {seconds:.6f}")
    return "\n".join(out) + "\n"


def render_motif_set(motifs: MotifSet) -> str:
    out = ["netmet-motifs 1", f"order {motifs.order}", f"count {len(motifs)}"]
    for matrix in motifs.matrices:
        out.append("motif")
        for row in matrix:
            out.append(" ".join(format_float(v) for v in row))
    return "\n".join(out) + "\n"
