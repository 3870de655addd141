"""In-memory RDF graph: a triple set with subject/predicate/object indexes."""

from __future__ import annotations

from typing import Iterable, Iterator

from ..errors import MalformedList
from ..namespaces import RDF_FIRST, RDF_NIL, RDF_REST
from .terms import BlankNode, Iri, Literal, Term, Triple


class Graph:
    """A set of triples indexed by subject, predicate and object.

    Triples are kept in insertion order, which makes iteration deterministic
    for a fixed construction sequence. Safe for concurrent reads once built;
    mutation requires exclusive access.
    """

    __slots__ = ("_triples", "_by_s", "_by_p", "_by_o", "_bnode_labels", "_bnode_counter")

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: dict[Triple, None] = {}
        self._by_s: dict[Term, dict[Triple, None]] = {}
        self._by_p: dict[Term, dict[Triple, None]] = {}
        self._by_o: dict[Term, dict[Triple, None]] = {}
        self._bnode_labels: set[str] = set()
        self._bnode_counter = 0
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> bool:
        """Insert a triple; returns True iff it was not already present."""
        if triple in self._triples:
            return False
        self._triples[triple] = None
        self._by_s.setdefault(triple.subject, {})[triple] = None
        self._by_p.setdefault(triple.predicate, {})[triple] = None
        self._by_o.setdefault(triple.object, {})[triple] = None
        for term in (triple.subject, triple.object):
            if isinstance(term, BlankNode):
                self._bnode_labels.add(term.label)
        return True

    def add_all(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def fresh_blank(self) -> BlankNode:
        """A blank node whose label collides with nothing in this graph."""
        while True:
            label = f"b{self._bnode_counter}"
            self._bnode_counter += 1
            if label not in self._bnode_labels:
                self._bnode_labels.add(label)
                return BlankNode(label)

    def __len__(self) -> int:
        return len(self._triples)

    def __eq__(self, other: object) -> bool:
        """Triple-set equality (labels compared verbatim, not up to renaming)."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples.keys() == other._triples.keys()

    __hash__ = None  # mutable container

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def match(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """Triples agreeing with every bound position, in insertion order."""
        candidates: Iterable[Triple]
        pools = []
        if subject is not None:
            pools.append(self._by_s.get(subject, {}))
        if predicate is not None:
            pools.append(self._by_p.get(predicate, {}))
        if object is not None:
            pools.append(self._by_o.get(object, {}))
        if not pools:
            return list(self._triples)
        candidates = min(pools, key=len)
        return [
            t
            for t in candidates
            if (subject is None or t.subject == subject)
            and (predicate is None or t.predicate == predicate)
            and (object is None or t.object == object)
        ]

    def subjects(self, predicate: Term | None = None, object: Term | None = None) -> list[Term]:
        """Distinct subjects of matching triples, in first-seen order."""
        seen: dict[Term, None] = {}
        for t in self.match(None, predicate, object):
            seen.setdefault(t.subject, None)
        return list(seen)

    def objects(self, subject: Term | None = None, predicate: Term | None = None) -> list[Term]:
        """Distinct objects of matching triples, in first-seen order."""
        seen: dict[Term, None] = {}
        for t in self.match(subject, predicate, None):
            seen.setdefault(t.object, None)
        return list(seen)

    def value(self, subject: Term, predicate: Term) -> Term | None:
        """The object of one matching triple, or None."""
        for t in self.match(subject, predicate, None):
            return t.object
        return None

    def blank_nodes(self) -> set[BlankNode]:
        nodes: set[BlankNode] = set()
        for t in self._triples:
            if isinstance(t.subject, BlankNode):
                nodes.add(t.subject)
            if isinstance(t.object, BlankNode):
                nodes.add(t.object)
        return nodes

    def copy(self) -> "Graph":
        return Graph(self._triples)


def merge_graphs(g1: Graph, g2: Graph) -> Graph:
    """Union of two graphs with g2's blank nodes renamed apart from g1's."""
    result = Graph(g1)
    renaming: dict[BlankNode, BlankNode] = {}

    def rename(term: Term) -> Term:
        if isinstance(term, BlankNode):
            if term not in renaming:
                renaming[term] = result.fresh_blank()
            return renaming[term]
        return term

    for t in g2:
        result.add(Triple(rename(t.subject), t.predicate, rename(t.object)))
    return result


def read_rdf_list(graph: Graph, head: Term) -> list[Term]:
    """Follow an rdf:first/rdf:rest chain from head to rdf:nil, in order."""
    nil = Iri(RDF_NIL)
    first = Iri(RDF_FIRST)
    rest = Iri(RDF_REST)
    items: list[Term] = []
    seen: set[Term] = set()
    node = head
    while node != nil:
        if isinstance(node, Literal):
            raise MalformedList(f"list node is a literal: {node}")
        if node in seen:
            raise MalformedList(f"cycle in list at {node}")
        seen.add(node)
        firsts = graph.objects(node, first)
        rests = graph.objects(node, rest)
        if len(firsts) != 1 or len(rests) != 1:
            raise MalformedList(
                f"list node {node} has {len(firsts)} rdf:first and {len(rests)} rdf:rest values"
            )
        items.append(firsts[0])
        node = rests[0]
    return items
