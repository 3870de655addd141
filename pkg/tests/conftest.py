"""Shared fixtures: seeded random graph generation and the permutation oracle.

The oracle deliberately avoids the library's isomorphism machinery: it maps
blank nodes by exhaustive permutation and compares plain triple sets.
"""

from __future__ import annotations

import random
from itertools import permutations

from mobilitydcat.rdf import BlankNode, Graph, Iri, Literal, Triple

IRIS = [Iri(f"http://example.org/n{i}") for i in range(12)]
PREDICATES = [Iri(f"http://example.org/p{i}") for i in range(6)]
LITERALS = [
    Literal("alpha"),
    Literal("42", datatype="http://www.w3.org/2001/XMLSchema#integer"),
    Literal("Fahrplan", language="de"),
    Literal("plan", language="en"),
]


def random_graph(rng: random.Random, max_triples: int = 50, max_blanks: int = 6) -> Graph:
    blanks = [BlankNode(f"n{i}") for i in range(rng.randint(0, max_blanks))]
    subjects = IRIS + blanks
    objects = IRIS + blanks + LITERALS
    graph = Graph()
    for _ in range(rng.randint(0, max_triples)):
        graph.add(
            Triple(rng.choice(subjects), rng.choice(PREDICATES), rng.choice(objects))
        )
    return graph


def relabel_randomly(graph: Graph, rng: random.Random) -> Graph:
    """Same graph under a random blank-node bijection, insertion order shuffled."""
    blanks = sorted(graph.blank_nodes(), key=lambda b: b.label)
    fresh = [BlankNode(f"z{i}") for i in range(len(blanks))]
    rng.shuffle(fresh)
    mapping = dict(zip(blanks, fresh))

    def swap(term):
        return mapping.get(term, term) if isinstance(term, BlankNode) else term

    triples = [Triple(swap(t.subject), t.predicate, swap(t.object)) for t in graph]
    rng.shuffle(triples)
    return Graph(triples)


def random_profile(rng: random.Random, base=None):
    """A structurally valid random profile, optionally extending a base."""
    from mobilitydcat.profile import (
        UNBOUNDED,
        ClassProfile,
        Obligation,
        Profile,
        PropertyProfile,
    )

    ns = "http://profiles.example.org/"
    classes = []
    for c in range(rng.randint(1, 4)):
        props = []
        for p in range(rng.randint(0, 5)):
            obligation = rng.choice(list(Obligation))
            if obligation is Obligation.MANDATORY:
                min_card = rng.randint(1, 2)
            elif obligation is Obligation.OPTIONAL:
                min_card = 0
            else:
                min_card = rng.randint(0, 1)
            max_card = rng.choice([UNBOUNDED, max(min_card, 1), max(min_card, 3)])
            props.append(PropertyProfile(
                property_iri=Iri(f"{ns}prop/{c}/{p}"),
                obligation=obligation,
                min_card=min_card,
                max_card=max_card,
                vocabulary=Iri(f"{ns}scheme/{p}") if rng.random() < 0.2 else None,
            ))
        classes.append(ClassProfile(class_iri=Iri(f"{ns}class/{c}"), properties=tuple(props)))
    return Profile(
        id=Iri(ns + f"profile/{rng.randint(0, 10 ** 6)}"),
        version=f"{rng.randint(0, 3)}.{rng.randint(0, 9)}.{rng.randint(0, 9)}",
        namespace=Iri(ns),
        classes=tuple(classes),
        base_profile=base,
    )


def permutation_oracle_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Ground-truth isomorphism by trying every blank-node bijection."""
    if len(g1) != len(g2):
        return False
    b1 = sorted(g1.blank_nodes(), key=lambda b: b.label)
    b2 = sorted(g2.blank_nodes(), key=lambda b: b.label)
    if len(b1) != len(b2):
        return False
    target = set(g2)
    for perm in permutations(b2):
        mapping = dict(zip(b1, perm))

        def swap(term):
            return mapping.get(term, term) if isinstance(term, BlankNode) else term

        if {Triple(swap(t.subject), t.predicate, swap(t.object)) for t in g1} == target:
            return True
    return False
