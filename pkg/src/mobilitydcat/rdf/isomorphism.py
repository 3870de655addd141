"""Blank-node-aware graph isomorphism.

Two graphs are isomorphic when some bijection on blank nodes maps one triple
set exactly onto the other. Ground triples must match as-is; blank nodes are
partitioned by iterative signature refinement and the remaining ambiguity is
resolved by backtracking inside signature classes. Metadata-sized graphs are
decided by refinement alone; the backtracking keeps pathological ones correct.
"""

from __future__ import annotations

from typing import Hashable

from .graph import Graph
from .terms import BlankNode, Term, Triple, term_sort_key

_OTHER = "*"  # placeholder for a neighbouring blank node in signatures


def _initial_signature(graph: Graph, node: BlankNode) -> tuple:
    parts = []
    for t in graph.match(subject=node):
        obj = _OTHER if isinstance(t.object, BlankNode) else str(t.object)
        parts.append(("s", t.predicate.value, obj))
    for t in graph.match(object=node):
        subj = _OTHER if isinstance(t.subject, BlankNode) else str(t.subject)
        parts.append(("o", t.predicate.value, subj))
    return tuple(sorted(parts))


def _refine(graph: Graph) -> dict[BlankNode, Hashable]:
    """Iteratively refine blank-node signatures until the partition is stable."""
    colors: dict[BlankNode, Hashable] = {
        b: _initial_signature(graph, b) for b in graph.blank_nodes()
    }
    if not colors:
        return colors
    for _ in range(len(colors)):
        new_colors: dict[BlankNode, Hashable] = {}
        for node, color in colors.items():
            neighbourhood = []
            for t in graph.match(subject=node):
                if isinstance(t.object, BlankNode):
                    neighbourhood.append(("s", t.predicate.value, colors[t.object]))
            for t in graph.match(object=node):
                if isinstance(t.subject, BlankNode):
                    neighbourhood.append(("o", t.predicate.value, colors[t.subject]))
            new_colors[node] = (color, tuple(sorted(neighbourhood)))
        # Re-intern nested tuples as small ints so colors stay cheap to compare.
        palette: dict[Hashable, int] = {}
        for node in sorted(new_colors, key=lambda n: repr(new_colors[n])):
            palette.setdefault(new_colors[node], len(palette))
        interned = {node: palette[c] for node, c in new_colors.items()}
        if len(set(interned.values())) == len(set(_as_ints(colors).values())):
            return interned
        colors = interned
    return _as_ints(colors)


def _as_ints(colors: dict[BlankNode, Hashable]) -> dict[BlankNode, int]:
    palette: dict[Hashable, int] = {}
    for node in sorted(colors, key=lambda n: repr(colors[n])):
        palette.setdefault(colors[node], len(palette))
    return {node: palette[c] for node, c in colors.items()}


def canonical_blank_order(graph: Graph) -> list[BlankNode]:
    """Blank nodes ordered by refined signature, labels breaking ties.

    Serializers relabel in this order so byte output is a pure function of
    the graph.
    """
    colors = _refine(graph)
    sigs = {b: _initial_signature(graph, b) for b in colors}
    return sorted(colors, key=lambda b: (colors[b], sigs[b], b.label))


def _apply(mapping: dict[BlankNode, BlankNode], t: Triple) -> Triple:
    s = mapping.get(t.subject, t.subject) if isinstance(t.subject, BlankNode) else t.subject
    o = mapping.get(t.object, t.object) if isinstance(t.object, BlankNode) else t.object
    return Triple(s, t.predicate, o)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if len(g1) != len(g2):
        return False
    ground1 = {t for t in g1 if not _has_blank(t)}
    ground2 = {t for t in g2 if not _has_blank(t)}
    if ground1 != ground2:
        return False
    b1 = sorted(g1.blank_nodes(), key=term_sort_key)
    b2 = sorted(g2.blank_nodes(), key=term_sort_key)
    if len(b1) != len(b2):
        return False
    if not b1:
        return True

    colors1 = _refine(g1)
    colors2 = _refine(g2)
    sig1 = {b: _initial_signature(g1, b) for b in b1}
    sig2 = {b: _initial_signature(g2, b) for b in b2}
    # Refined colors are graph-local ints; compare partitions through the
    # stable initial signatures each class carries.
    classes1 = _classes_by_signature(colors1, sig1)
    classes2 = _classes_by_signature(colors2, sig2)
    if sorted(classes1) != sorted(classes2):
        return False
    if any(len(classes1[k]) != len(classes2[k]) for k in classes1):
        return False

    blank1 = {t for t in g1 if _has_blank(t)}
    blank2 = {t for t in g2 if _has_blank(t)}

    # Backtrack over per-class candidate assignments, cheapest class first.
    order: list[BlankNode] = []
    candidates: dict[BlankNode, list[BlankNode]] = {}
    for key in sorted(classes1, key=lambda k: (len(classes1[k]), k)):
        for node in classes1[key]:
            order.append(node)
            candidates[node] = classes2[key]

    used: set[BlankNode] = set()
    mapping: dict[BlankNode, BlankNode] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return {_apply(mapping, t) for t in blank1} == blank2
        node = order[i]
        for target in candidates[node]:
            if target in used:
                continue
            mapping[node] = target
            used.add(target)
            if _consistent_so_far(blank1, blank2, mapping, node) and extend(i + 1):
                return True
            used.discard(target)
            del mapping[node]
        return False

    return extend(0)


def _consistent_so_far(
    blank1: set[Triple],
    blank2: set[Triple],
    mapping: dict[BlankNode, BlankNode],
    newest: BlankNode,
) -> bool:
    """Every fully mapped triple touching the newest node must exist in g2."""
    for t in blank1:
        touches = (t.subject == newest) or (t.object == newest)
        if not touches:
            continue
        s_ok = not isinstance(t.subject, BlankNode) or t.subject in mapping
        o_ok = not isinstance(t.object, BlankNode) or t.object in mapping
        if s_ok and o_ok and _apply(mapping, t) not in blank2:
            return False
    return True


def _classes_by_signature(
    colors: dict[BlankNode, int], sigs: dict[BlankNode, tuple]
) -> dict[tuple, list[BlankNode]]:
    # A class is identified by the multiset of initial signatures it refines
    # from; refined colors themselves are not comparable across graphs.
    by_color: dict[int, list[BlankNode]] = {}
    for node, color in colors.items():
        by_color.setdefault(color, []).append(node)
    out: dict[tuple, list[BlankNode]] = {}
    for members in by_color.values():
        key = tuple(sorted(sigs[m] for m in members))
        out.setdefault(key, []).extend(members)
    return out


def _has_blank(t: Triple) -> bool:
    return isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode)
