"""Line-oriented N-Triples parser."""

from __future__ import annotations

import re

from ..errors import ParseError
from .graph import Graph
from .terms import BlankNode, Iri, Literal, Term, Triple

_IRI = r"<([^\x00-\x20<>\"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*>"
_BLANK = r"_:[A-Za-z0-9][A-Za-z0-9_.\-]*"
_STRING = r'"(?:[^"\\\n\r]|\\.)*"'
_LANG = r"@[A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*"

_TERM_RE = re.compile(
    rf"(?P<iri>{_IRI})|(?P<blank>{_BLANK})"
    rf"|(?P<literal>{_STRING})(?:(?P<lang>{_LANG})|\^\^(?P<dt>{_IRI}))?"
)

_UNESCAPE_RE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_SIMPLE_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
                   '"': '"', "'": "'", "\\": "\\"}


def _unescape(text: str, line_no: int) -> str:
    def sub(m: re.Match) -> str:
        if m.group(1):
            return chr(int(m.group(1), 16))
        if m.group(2):
            return chr(int(m.group(2), 16))
        ch = m.group(3)
        if ch not in _SIMPLE_ESCAPES:
            raise ParseError(f"unknown escape \\{ch}", line_no)
        return _SIMPLE_ESCAPES[ch]

    return _UNESCAPE_RE.sub(sub, text)


def _read_term(text: str, pos: int, line_no: int) -> tuple[Term, int]:
    m = _TERM_RE.match(text, pos)
    if not m:
        raise ParseError(f"malformed term at {text[pos:pos + 20]!r}", line_no, pos + 1)
    if m.group("iri") and not m.group("literal"):
        return Iri(_unescape(m.group("iri")[1:-1], line_no)), m.end()
    if m.group("blank"):
        return BlankNode(m.group("blank")[2:]), m.end()
    lexical = _unescape(m.group("literal")[1:-1], line_no)
    if m.group("lang"):
        return Literal(lexical, language=m.group("lang")[1:]), m.end()
    if m.group("dt"):
        return Literal(lexical, datatype=_unescape(m.group("dt")[1:-1], line_no)), m.end()
    return Literal(lexical), m.end()


def parse_ntriples(text: str) -> Graph:
    """Parse an N-Triples document; duplicate lines collapse to one triple."""
    graph = Graph()
    # N-Triples lines end in LF/CRLF; do not split on other Unicode breaks,
    # which may legally appear raw inside literals.
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip(" \t\r")
        if not line or line.startswith("#"):
            continue
        pos = 0
        terms: list[Term] = []
        for _ in range(3):
            term, pos = _read_term(line, pos, line_no)
            terms.append(term)
            while pos < len(line) and line[pos] in " \t":
                pos += 1
        if pos >= len(line) or line[pos] != ".":
            raise ParseError("statement missing terminal '.'", line_no, pos + 1)
        if line[pos + 1:].strip():
            raise ParseError("trailing content after '.'", line_no, pos + 2)
        subject, predicate, obj = terms
        if not isinstance(subject, (Iri, BlankNode)) or isinstance(subject, Literal):
            raise ParseError("subject must be IRI or blank node", line_no)
        if not isinstance(predicate, Iri):
            raise ParseError("predicate must be an IRI", line_no)
        graph.add(Triple(subject, predicate, obj))
    return graph
