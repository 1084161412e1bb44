"""Localization at a set of kept vertices.

At the quiver level every path between kept vertices whose interior runs
through deleted (torsion) vertices contracts to one arrow; a family of such
paths contributes label (sum of d1 products, sum of d2 products). At the
comodule level the functor keeps the kept components and turns each
contracted path into the composite of the original arrow maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Optional, Union

from .comodule import Representation
from .errors import EmptySubset, InfiniteLocalization
from .linalg import Matrix
from .quiver import ArrowKey, ValuedArrow, ValuedQuiver, iter_paths, sort_vertices
from .verdict import Verdict

PATH_LIMIT = 10 ** 6


@dataclass(frozen=True)
class VertexSubset:
    kept: frozenset

    @classmethod
    def of(cls, q: ValuedQuiver, names: Iterable[str]) -> "VertexSubset":
        kept = frozenset(str(n) for n in names)
        if not kept:
            raise EmptySubset("kept vertex set is empty")
        q.require(*sort_vertices(kept))
        return cls(kept)

    def sorted(self) -> list[str]:
        return sort_vertices(self.kept)


@dataclass(frozen=True)
class PathEvidence:
    vertices: tuple[str, ...]
    d1_product: int
    d2_product: int

    def to_json(self) -> dict:
        return {"path": list(self.vertices), "d1": self.d1_product, "d2": self.d2_product}


@dataclass
class LocalizationResult:
    kept: tuple[str, ...]
    quiver: Optional[ValuedQuiver]
    infinite_label: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)  # (x, z) -> [PathEvidence]
    paths: dict = field(default_factory=dict)  # (x, z) -> [[ValuedArrow]]

    @property
    def is_finite(self) -> bool:
        return not self.infinite_label

    def label(self, x: str, z: str) -> Optional[tuple[int, int]]:
        ev = self.evidence.get((x, z))
        if not ev:
            return None
        return (sum(e.d1_product for e in ev), sum(e.d2_product for e in ev))

    def to_json(self) -> dict:
        return {
            "kept": list(self.kept),
            "finite": self.is_finite,
            "infinite_label": [list(p) for p in self.infinite_label],
            "arrows": [
                {
                    "src": x,
                    "dst": z,
                    "label": list(self.label(x, z)),
                    "paths": [e.to_json() for e in ev],
                }
                for (x, z), ev in self.evidence.items()
            ],
        }


def _as_subset(q: ValuedQuiver, w) -> VertexSubset:
    return w if isinstance(w, VertexSubset) else VertexSubset.of(q, w)


def _closure(start: Iterable[str], step: dict, within: set) -> set:
    seen: set = set()
    stack = [v for v in start if v in within]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in step.get(v, ()) if w in within)
    return seen


def _on_torsion_cycle(q: ValuedQuiver, torsion: set) -> set:
    """Torsion vertices lying on a directed cycle that stays inside the torsion part."""
    succ: dict = {}
    for a in q.arrows:
        if a.src in torsion and a.dst in torsion:
            succ.setdefault(a.src, []).append(a.dst)
    return {t for t in torsion if t in _closure(succ.get(t, ()), succ, torsion)}


def localize_quiver(q: ValuedQuiver, w: Union[VertexSubset, Iterable[str]], limit: int = PATH_LIMIT) -> LocalizationResult:
    w = _as_subset(q, w)
    kept = w.sorted()
    torsion = set(q.vertices) - w.kept
    succ: dict = {}
    pred: dict = {}
    for a in q.arrows:
        succ.setdefault(a.src, []).append(a.dst)
        pred.setdefault(a.dst, []).append(a.src)
    cyclic = _on_torsion_cycle(q, torsion)
    infinite = []
    evidence: dict = {}
    paths: dict = {}
    for x in kept:
        from_x = _closure(succ.get(x, ()), succ, torsion)
        for z in kept:
            to_z = _closure(pred.get(z, ()), pred, torsion)
            if cyclic & from_x & to_z:
                infinite.append((x, z))
                continue
            found = list(iter_paths(q, x, z, from_x & to_z, limit))
            if found:
                paths[(x, z)] = found
                evidence[(x, z)] = [
                    PathEvidence(
                        tuple([p[0].src] + [a.dst for a in p]),
                        prod(a.d1 for a in p),
                        prod(a.d2 for a in p),
                    )
                    for p in found
                ]
    if infinite:
        return LocalizationResult(tuple(kept), None, infinite, evidence, paths)
    arrows = []
    for (x, z), ev in evidence.items():
        arrows.append(ValuedArrow(x, z, sum(e.d1_product for e in ev), sum(e.d2_product for e in ev)))
    family = q.family if not torsion else None
    return LocalizationResult(tuple(kept), ValuedQuiver(tuple(kept), tuple(arrows), family), [], evidence, paths)


def localize_colocal(q: ValuedQuiver, x: str) -> LocalizationResult:
    return localize_quiver(q, [x])


def restrict_comodule(m: Representation, w: Union[VertexSubset, Iterable[str]]) -> Representation:
    """eM over the localized quiver.

    Each contracted path of valued arrows stands for prod(d) paths of the
    pointed multiquiver (one choice of parallel copy per step); every such
    multipath becomes its own arrow copy, acting by the composite of the
    original maps along it.
    """
    q = m.quiver
    loc = localize_quiver(q, w)
    if not loc.is_finite:
        raise InfiniteLocalization(loc.infinite_label)
    F = m.field
    maps = {}
    for (x, z), found in loc.paths.items():
        idx = 0
        for p in found:
            for copies in itertools.product(*(range(a.d1) for a in p)):
                M = Matrix.identity(F, m.dims[x])
                for a, c in zip(p, copies):
                    M = m.maps[ArrowKey(a.src, a.dst, c)] @ M
                maps[ArrowKey(x, z, idx)] = M
                idx += 1
    dims = {v: m.dims[v] for v in loc.kept}
    labels = {v: m.labels[v] for v in loc.kept if v in m.labels} if m.labels else None
    return Representation(loc.quiver, dims, maps, F, labels)


# ---------------------------------------------------------------------------
# Local-global seriality


def _right_serial(q: ValuedQuiver) -> bool:
    from .classify import is_right_serial

    return is_right_serial(q).value


@dataclass
class LocalGlobalReport:
    global_right_serial: bool
    checked: int
    failures: list  # kept subsets (size <= max_size) whose localization is not right-serial
    failures_small: list  # the same restricted to size <= 2
    indeterminate: list  # subsets whose localization has an infinite label
    max_size: int = 3

    @property
    def local_verdict(self) -> bool:
        return not self.failures

    @property
    def matches_global(self) -> bool:
        return self.local_verdict == self.global_right_serial

    @property
    def small_false_positive(self) -> bool:
        """Pairs and singletons all look right-serial although the quiver is not."""
        return not self.failures_small and not self.global_right_serial

    def verdict(self) -> Verdict:
        if self.matches_global:
            return Verdict(True, reason=f"local check at size <= {self.max_size} agrees with the global verdict")
        return Verdict(False, reason="local and global right-seriality disagree")

    def to_json(self) -> dict:
        return {
            "global_right_serial": self.global_right_serial,
            "subsets_checked": self.checked,
            "local_right_serial": self.local_verdict,
            "matches_global": self.matches_global,
            "failures": [list(s) for s in self.failures],
            "small_subset_false_positive": self.small_false_positive,
            "indeterminate": [list(s) for s in self.indeterminate],
        }


def check_serial_local_global(q: ValuedQuiver, max_size: int = 3) -> LocalGlobalReport:
    failures, small, indeterminate = [], [], []
    checked = 0
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(q.vertices, size):
            checked += 1
            loc = localize_quiver(q, subset)
            if not loc.is_finite:
                indeterminate.append(subset)
                continue
            if not _right_serial(loc.quiver):
                failures.append(subset)
                if size <= 2:
                    small.append(subset)
    return LocalGlobalReport(_right_serial(q), checked, failures, small, indeterminate, max_size)
