"""
Posets of components and of circular permutations, with DOT/JSON export.

The component side is primary: admitted vectors under the coordinatewise
order, with covers lambda < lambda + e_{i,j} labelled by the incremented root.
The cycle side is obtained by transporting it through the inverse bijection;
each cover is then labelled, where possible, by a transposition s with
upper = s lower s.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .algebra import Permutation, PositiveRoot, circular_permutations, conjugate, positive_roots, transposition
from .bijection import bijection_table
from .components import AdmittedVector, enumerate_admitted
from .shi import RootVector

__all__ = [
    "ComponentPoset", "CyclePoset", "LabelNotFound",
    "build_component_poset", "build_cycle_poset", "transposition_labels",
    "export_dot", "to_dot", "to_json", "dumps", "check_poset_isomorphism",
    "order_from_covers", "product_order", "is_lattice",
]


class LabelNotFound(LookupError):
    pass


@dataclass
class ComponentPoset:
    n: int
    elements: list[AdmittedVector]
    covers: list[tuple[int, int, PositiveRoot]]

    def node_label(self, a: int) -> str:
        return str(self.elements[a])

    def edge_label(self, label) -> str:
        return f"({label[0]},{label[1]})"


@dataclass
class CyclePoset:
    n: int
    elements: list[Permutation]
    # label is None when no transposition conjugates lower to upper
    covers: list[tuple[int, int, Optional[tuple[int, int]]]]
    alternatives: dict = field(default_factory=dict)
    missing: list[tuple[int, int]] = field(default_factory=list)

    def node_label(self, a: int) -> str:
        return self.elements[a].cycle_str()

    def edge_label(self, label) -> str:
        return "?" if label is None else f"({label[0]} {label[1]})"


Poset = Union[ComponentPoset, CyclePoset]


def build_component_poset(n: int) -> ComponentPoset:
    elements = enumerate_admitted(n)
    index = {v: a for a, v in enumerate(elements)}
    covers = []
    for a, v in enumerate(elements):
        for root in positive_roots(n):
            up = v + RootVector.unit(n, root)
            b = index.get(up)
            if b is not None:
                covers.append((a, b, root))
    return ComponentPoset(n, elements, covers)


def transposition_labels(lower: Permutation, upper: Permutation) -> list[tuple[int, int]]:
    """All (k, l) with s_{k,l} lower s_{k,l} == upper, lexicographic."""
    n = lower.n
    return [(k, l) for k, l in itertools.combinations(range(1, n + 2), 2)
            if conjugate(transposition(n, k, l), lower) == upper]


def build_cycle_poset(n: int, strict: bool = False) -> CyclePoset:
    """Transport of the component poset through the inverse bijection.

    When several transpositions conjugate lower to upper, the one matching
    the incremented root is chosen if possible; all candidates are kept in
    ``alternatives``.  With ``strict=True`` a cover without a transposition
    label raises :class:`LabelNotFound`; otherwise it is kept with label
    ``None`` and listed in ``missing``.
    """
    comp = build_component_poset(n)
    table = bijection_table(n)
    elements = circular_permutations(n)
    index = {c: a for a, c in enumerate(elements)}
    covers, alternatives, missing = [], {}, []
    for a, b, root in comp.covers:
        lo = table.backward[comp.elements[a]]
        up = table.backward[comp.elements[b]]
        edge = (index[lo], index[up])
        labels = transposition_labels(lo, up)
        if root in labels:
            # several transpositions may work; prefer the incremented root's
            labels.remove(root)
            labels.insert(0, root)
        if not labels:
            if strict:
                raise LabelNotFound(f"no transposition conjugates {lo.cycle_str()} to {up.cycle_str()}")
            missing.append(edge)
        if len(labels) > 1:
            alternatives[edge] = labels
        covers.append((*edge, labels[0] if labels else None))
    covers.sort()
    return CyclePoset(n, elements, covers, alternatives, missing)


def to_dot(poset: Poset) -> str:
    kind = "components" if isinstance(poset, ComponentPoset) else "cycles"
    lines = [f'digraph "{kind}_A{poset.n}" {{', "  rankdir=BT;"]
    for a in range(len(poset.elements)):
        lines.append(f'  n{a} [label="{poset.node_label(a)}"];')
    for a, b, label in poset.covers:
        lines.append(f'  n{a} -> n{b} [label="{poset.edge_label(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(poset: Poset, path) -> None:
    Path(path).write_text(to_dot(poset))


def to_json(poset: Poset) -> dict:
    if isinstance(poset, ComponentPoset):
        nodes = [v.to_dict(skip_simple=True) for v in poset.elements]
        label = lambda lab: f"{lab[0]},{lab[1]}"
    else:
        nodes = [str(c) for c in poset.elements]
        label = lambda lab: None if lab is None else f"{lab[0]} {lab[1]}"
    return {
        "n": poset.n,
        "nodes": nodes,
        "covers": [{"from": a, "to": b, "label": label(lab)} for a, b, lab in poset.covers],
    }


def dumps(poset: Poset) -> str:
    return json.dumps(to_json(poset), indent=1)


def order_from_covers(size: int, covers) -> set[tuple[int, int]]:
    """Reflexive-transitive closure of the cover relation."""
    up = [[] for _ in range(size)]
    for a, b, *_ in covers:
        up[a].append(b)
    rel = set()
    for a in range(size):
        stack, seen = [a], {a}
        while stack:
            x = stack.pop()
            rel.add((a, x))
            for y in up[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return rel


def product_order(elements: list[RootVector]) -> set[tuple[int, int]]:
    return {(a, b) for a, u in enumerate(elements) for b, v in enumerate(elements)
            if all(x <= y for x, y in zip(u.values, v.values))}


def check_poset_isomorphism(n: int) -> bool:
    """The inverse bijection carries component covers to labelled conjugation covers."""
    comp = build_component_poset(n)
    cyc = build_cycle_poset(n)
    table = bijection_table(n)
    if len(comp.elements) != len(cyc.elements) or len(comp.covers) != len(cyc.covers):
        return False
    if cyc.missing:
        return False
    index = {c: a for a, c in enumerate(cyc.elements)}
    image = {a: index[table.backward[v]] for a, v in enumerate(comp.elements)}
    rel_comp = order_from_covers(len(comp.elements), comp.covers)
    rel_cyc = order_from_covers(len(cyc.elements), cyc.covers)
    if {(image[a], image[b]) for a, b in rel_comp} != rel_cyc:
        return False
    return all(conjugate(transposition(n, *lab), cyc.elements[a]) == cyc.elements[b]
               for a, b, lab in cyc.covers)


def is_lattice(poset: Poset) -> bool:
    """Diagnostic: every pair has a unique least upper and greatest lower bound."""
    size = len(poset.elements)
    rel = order_from_covers(size, poset.covers)
    leq = lambda a, b: (a, b) in rel
    for a, b in itertools.combinations(range(size), 2):
        ups = [c for c in range(size) if leq(a, c) and leq(b, c)]
        downs = [c for c in range(size) if leq(c, a) and leq(c, b)]
        if not any(all(leq(u, v) for v in ups) for u in ups):
            return False
        if not any(all(leq(v, d) for v in downs) for d in downs):
            return False
    return True
