"""Text formats: 0/1 adjacency matrix, digraph6 (n <= 62) and DOT export."""

from __future__ import annotations

from p2turan.digraph import Digraph

MATRIX = "matrix"
DIGRAPH6 = "digraph6"
FORMATS = (MATRIX, DIGRAPH6)
DIGRAPH6_MAX_ORDER = 62


class FormatError(ValueError):
    pass


def to_matrix(d: Digraph) -> str:
    n = d.order
    lines = [str(n)]
    for row in d.rows:
        lines.append("".join("1" if row >> v & 1 else "0" for v in range(n)))
    return "\n".join(lines) + "\n"


def from_matrix(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise FormatError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the order, got {lines[0]!r}") from None
    body = lines[1:]
    if n < 1 or len(body) != n:
        raise FormatError(f"expected {n} matrix rows, got {len(body)}")
    rows = []
    for u, line in enumerate(body):
        if len(line) != n:
            raise FormatError(f"row {u} has length {len(line)}, expected {n}")
        if set(line) - {"0", "1"}:
            raise FormatError(f"row {u} contains characters other than 0/1")
        if line[u] == "1":
            raise FormatError(f"loop at vertex {u}")
        rows.append(sum(1 << v for v, ch in enumerate(line) if ch == "1"))
    return Digraph(n, tuple(rows))


def to_digraph6(d: Digraph) -> str:
    n = d.order
    if n > DIGRAPH6_MAX_ORDER:
        raise FormatError(f"digraph6 supported for n <= {DIGRAPH6_MAX_ORDER}; use the matrix format")
    bits = [d.rows[u] >> v & 1 for u in range(n) for v in range(n)]
    bits += [0] * (-len(bits) % 6)
    out = ["&", chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_digraph6(text: str) -> Digraph:
    s = text.strip()
    if not s.startswith("&"):
        raise FormatError("digraph6 strings start with '&'")
    if len(s) < 2:
        raise FormatError("missing order byte")
    n = ord(s[1]) - 63
    if not 1 <= n <= DIGRAPH6_MAX_ORDER:
        raise FormatError(f"unsupported digraph6 order byte {s[1]!r}")
    body = s[2:]
    if len(body) != -(-n * n // 6):
        raise FormatError(f"digraph6 body has {len(body)} bytes, expected {-(-n * n // 6)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FormatError(f"illegal digraph6 byte {ch!r}")
        bits.extend(val >> (5 - k) & 1 for k in range(6))
    if any(bits[n * n:]):
        raise FormatError("nonzero padding bits")
    rows = []
    for u in range(n):
        if bits[u * n + u]:
            raise FormatError(f"loop at vertex {u}")
        rows.append(sum(1 << v for v in range(n) if bits[u * n + v]))
    return Digraph(n, tuple(rows))


def parse_digraph(text: str, fmt: str | None = None) -> Digraph:
    """Parse ``text``; with ``fmt=None`` a leading '&' selects digraph6."""
    if fmt is None:
        fmt = DIGRAPH6 if text.lstrip().startswith("&") else MATRIX
    if fmt == MATRIX:
        return from_matrix(text)
    if fmt == DIGRAPH6:
        return from_digraph6(text)
    raise FormatError(f"unknown format {fmt!r}")


def serialize_digraph(d: Digraph, fmt: str = MATRIX) -> str:
    if fmt == MATRIX:
        return to_matrix(d)
    if fmt == DIGRAPH6:
        return to_digraph6(d)
    raise FormatError(f"unknown format {fmt!r}")


def to_dot(d: Digraph, class_of: tuple[int, ...] | None = None, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(d.order):
        label = f' [label="{v}" group="U{class_of[v] + 1}"]' if class_of else ""
        lines.append(f"  {v}{label};")
    for u, v in d.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
