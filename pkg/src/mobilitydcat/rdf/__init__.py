"""RDF data model and IO: terms, indexed graphs, parsing and serialization."""

from .graph import Graph, merge_graphs, read_rdf_list
from .isomorphism import is_isomorphic
from .ntriples import parse_ntriples
from .serialize import Format, PrefixMap, serialize
from .terms import BlankNode, Iri, Literal, Term, Triple, term_sort_key
from .turtle import parse_turtle, resolve_iri

__all__ = [
    "BlankNode",
    "Format",
    "Graph",
    "Iri",
    "Literal",
    "PrefixMap",
    "Term",
    "Triple",
    "is_isomorphic",
    "merge_graphs",
    "parse_ntriples",
    "parse_turtle",
    "read_rdf_list",
    "resolve_iri",
    "serialize",
    "term_sort_key",
]
