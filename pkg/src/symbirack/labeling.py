"""Enumerate birack labelings of a diagram.

A labeling assigns an element of the birack to every semiarc so that at
each classical crossing ``under_out = under_in under over_in`` and
``over_out = over_in over under_in``, and at each virtual crossing
``a_out = a_in virt b_in`` and ``b_out = b_in virt a_in``.  One relation
convention serves both crossing signs: for involutory biracks the
inverse-crossing relations coincide with the direct ones (a consequence
of axiom (ii) that the test suite checks rather than assumes).

The main enumerator backtracks over semiarcs in strand-traversal order,
propagating crossing outputs as soon as both inputs are known, and
re-checks every complete assignment against all relations.  A raw
brute-force enumerator over all n^semiarcs assignments serves as oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .algebra import BirackTable
from .diagram import Diagram

DEFAULT_BRUTE_FORCE_CAP = 10 ** 7


@dataclass(frozen=True)
class Labeling:
    """Total assignment semiarc -> element (values 1-based, aligned slots)."""

    semiarcs: tuple[str, ...]
    values: tuple[int, ...]

    def __getitem__(self, semiarc: str) -> int:
        return self.values[self.semiarcs.index(semiarc)]

    @property
    def assignment(self) -> dict[str, int]:
        return dict(zip(self.semiarcs, self.values))

    def lines(self) -> list[str]:
        """"semiarc=element" lines sorted by semiarc name."""
        return [f"{s}={v}" for s, v in sorted(self.assignment.items())]


class _Prepared(NamedTuple):
    """Diagram preprocessed for labeling enumeration (all 0-based)."""

    arcs: tuple[str, ...]
    # per crossing: input slots, output slots, classical flag
    cons: tuple[tuple[int, int, int, int, bool], ...]
    watch: tuple[tuple[int, ...], ...]  # arc -> crossings it feeds
    order: tuple[int, ...]              # assignment order: traversal order
    sort_positions: tuple[int, ...]     # arc indices in sorted-name order


def _prepare(d: Diagram) -> _Prepared:
    arcs = d.semiarcs
    index = {s: i for i, s in enumerate(arcs)}
    cons = tuple(
        (index[c.in1], index[c.in2], index[c.out1], index[c.out2], c.is_classical)
        for c in d.crossings
    )
    watch: list[list[int]] = [[] for _ in arcs]
    for ci, (i1, i2, _, _, _) in enumerate(cons):
        watch[i1].append(ci)
        watch[i2].append(ci)
    order = tuple(index[s] for comp in d.components for s in comp)
    sort_positions = tuple(index[s] for s in sorted(arcs))
    return _Prepared(arcs, cons, tuple(map(tuple, watch)), order, sort_positions)


def _satisfies(values: tuple[int, ...], prep: _Prepared, t: BirackTable) -> bool:
    under, over, virt = t.under, t.over, t.virt
    for i1, i2, o1, o2, classical in prep.cons:
        t1, t2 = (under, over) if classical else (virt, virt)
        if values[o1] != t1[values[i1] - 1][values[i2] - 1]:
            return False
        if values[o2] != t2[values[i2] - 1][values[i1] - 1]:
            return False
    return True


def _solve(prep: _Prepared, t: BirackTable) -> list[tuple[int, ...]]:
    """All satisfying value vectors (1-based), sorted lexicographically in
    sorted-semiarc-name order."""
    n = t.n
    under, over, virt = t.under, t.over, t.virt
    cons, watch, order = prep.cons, prep.watch, prep.order
    assign = [0] * len(prep.arcs)  # 0 = unassigned
    found: list[tuple[int, ...]] = []

    def propagate(seed: int, trail: list[int]) -> bool:
        queue = [seed]
        while queue:
            for ci in watch[queue.pop()]:
                i1, i2, o1, o2, classical = cons[ci]
                v1, v2 = assign[i1], assign[i2]
                if not v1 or not v2:
                    continue
                t1, t2 = (under, over) if classical else (virt, virt)
                for o, w in ((o1, t1[v1 - 1][v2 - 1]), (o2, t2[v2 - 1][v1 - 1])):
                    cur = assign[o]
                    if cur:
                        if cur != w:
                            return False
                    else:
                        assign[o] = w
                        trail.append(o)
                        queue.append(o)
        return True

    def extend(k: int) -> None:
        while k < len(order) and assign[order[k]]:
            k += 1
        if k == len(order):
            found.append(tuple(assign))
            return
        arc = order[k]
        for val in range(1, n + 1):
            assign[arc] = val
            trail = [arc]
            if propagate(arc, trail):
                extend(k + 1)
            for a in trail:
                assign[a] = 0

    extend(0)
    # soundness re-check is independent of propagation details
    results = [v for v in found if _satisfies(v, prep, t)]
    results.sort(key=lambda v: tuple(v[i] for i in prep.sort_positions))
    return results


def enumerate_labelings(d: Diagram, t: BirackTable) -> list[Labeling]:
    """All X-labelings of d, in lexicographic (sorted semiarc name) order."""
    prep = _prepare(d)
    return [Labeling(prep.arcs, v) for v in _solve(prep, t)]


def brute_force_labelings(d: Diagram, t: BirackTable,
                          cap: int = DEFAULT_BRUTE_FORCE_CAP) -> list[Labeling]:
    """Oracle: filter all n^semiarcs assignments by the crossing relations.

    Refuses to enumerate more than ``cap`` assignments.
    """
    prep = _prepare(d)
    k = len(prep.arcs)
    if t.n ** k > cap:
        raise ValueError(f"cap exceeded: {t.n}^{k} > {cap}")
    results = [
        values
        for values in itertools.product(range(1, t.n + 1), repeat=k)
        if _satisfies(values, prep, t)
    ]
    results.sort(key=lambda v: tuple(v[i] for i in prep.sort_positions))
    return [Labeling(prep.arcs, v) for v in results]


def labeling_count(d: Diagram, t: BirackTable) -> int:
    return len(_solve(_prepare(d), t))
