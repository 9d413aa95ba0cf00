"""File formats: plain edge lists and chain-form multiplicity files.

Edge list:
    first non-comment line:  "n e"
    then e lines:            "u v"        (decimal, space separated, 0-based)

Chain form:
    line 1:  "k"
    line 2:  "m: a_0 a_1 ... a_k"
    line 3:  "mp: b_0 b_1 ... b_k"

'#' starts a comment that runs to the end of the line; blank lines are
ignored.  Writers always emit the canonical spacing shown above so that a
fixed instance serializes byte for byte identically everywhere.
"""

from __future__ import annotations

from pathlib import Path

from .forms import ChainForm
from .graphs import SimpleGraph


class ParseError(ValueError):
    """Malformed input file; message carries the offending line number."""


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _ints(line: str, lineno: int, expected: int | None = None) -> list[int]:
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ParseError(f"line {lineno}: expected integers, got {line!r}") from exc
    if expected is not None and len(values) != expected:
        raise ParseError(f"line {lineno}: expected {expected} integers, got {len(values)}")
    return values


def parse_edge_list(text: str) -> SimpleGraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty edge-list input")
    lineno, header = lines[0]
    n, e = _ints(header, lineno, expected=2)
    if n < 0 or e < 0:
        raise ParseError(f"line {lineno}: negative counts in header")
    body = lines[1:]
    if len(body) != e:
        raise ParseError(f"header promises {e} edges, file has {len(body)}")
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, expected=2)
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint outside 0..{n - 1}")
        edges.append((u, v))
    return SimpleGraph(n, frozenset(edges))


def format_edge_list(g: SimpleGraph) -> str:
    edges = sorted(g.edges)
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def parse_chain_form(text: str) -> ChainForm:
    lines = _content_lines(text)
    if len(lines) != 3:
        raise ParseError(f"chain-form input needs exactly 3 content lines, got {len(lines)}")
    (ln_k, line_k), (ln_m, line_m), (ln_mp, line_mp) = lines
    (k,) = _ints(line_k, ln_k, expected=1)
    if k < 0:
        raise ParseError(f"line {ln_k}: k must be nonnegative")
    if not line_m.startswith("m:"):
        raise ParseError(f"line {ln_m}: expected 'm:' prefix")
    if not line_mp.startswith("mp:"):
        raise ParseError(f"line {ln_mp}: expected 'mp:' prefix")
    m = _ints(line_m[2:], ln_m, expected=k + 1)
    mp = _ints(line_mp[3:], ln_mp, expected=k + 1)
    try:
        return ChainForm(k, tuple(m), tuple(mp))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_chain_form(form: ChainForm) -> str:
    m = " ".join(str(v) for v in form.m)
    mp = " ".join(str(v) for v in form.m_prime)
    return f"{form.k}\nm: {m}\nmp: {mp}\n"


def read_edge_list(path: str | Path) -> SimpleGraph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))


def read_chain_form(path: str | Path) -> ChainForm:
    return parse_chain_form(Path(path).read_text())


def write_chain_form(form: ChainForm, path: str | Path) -> None:
    Path(path).write_text(format_chain_form(form))
