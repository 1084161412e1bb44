"""Auslander-Reiten quivers of serial path coalgebras.

Every finite-dimensional indecomposable is a truncation S^k_v = soc^k E_v.
With pred(v) the source of the unique arrow into v, the almost split
sequence starting at a non-injective S^k_v is

    0 -> S^k_v -> S^{k+1}_v (+) S^{k-1}_pred(v) -> S^k_pred(v) -> 0

and the translate sends the right end back to the left end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .classify import serial_shape
from .comodule import (
    DirectSum,
    Morphism,
    Representation,
    direct_sum_data,
    hom_space,
    induced_map,
    injective_truncation,
    is_indecomposable,
    is_isomorphic,
    check_nilpotent,
    quotient_map,
    socle,
)
from .errors import DimensionBoundExceeded, InjectiveNode, NotNilpotent, NotSerialInput
from .linalg import GF2, QQ, Field, Matrix, PrimeField
from .quiver import ValuedQuiver, dot_id, vertex_key
from .verdict import Verdict, Witness

DEFAULT_DEPTH = 6


@dataclass(frozen=True, order=False)
class ARNode:
    vertex: str
    level: int

    @property
    def name(self) -> str:
        return f"S^{self.level}_{self.vertex}"

    def sort_key(self):
        return (self.level, vertex_key(self.vertex))

    def __str__(self):
        return self.name


# ---------------------------------------------------------------------------
# Realizing a serial quiver as a finite pointed quiver


@dataclass
class Realization:
    """A finite pointed quiver on which the truncations of interest live faithfully.

    For families that are infinite towards the sources, virtual predecessors
    are prepended to the window so that soc^k E_v is exact up to the depth.
    """

    source: ValuedQuiver
    quiver: ValuedQuiver
    window: tuple[str, ...]
    pred: dict
    loewy: dict  # vertex -> Loewy length of E_v, None when infinite
    shape: str
    tube_rank: Optional[int] = None

    def is_injective(self, node: ARNode) -> bool:
        length = self.loewy.get(node.vertex)
        return length is not None and node.level >= length

    def exists(self, node: ARNode) -> bool:
        length = self.loewy.get(node.vertex)
        return node.level >= 1 and (length is None or node.level <= length)


def _virtual_names(q: ValuedQuiver, count: int) -> list[str]:
    prefix = "~"
    while any(v.startswith(prefix) for v in q.vertices):
        prefix += "~"
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def realize(q: ValuedQuiver, depth: int = DEFAULT_DEPTH) -> Realization:
    shapes = serial_shape(q)
    for cs in shapes:
        if not cs.shape.is_serial:
            raise NotSerialInput(f"component {list(cs.vertices)} is not serial", cs.shape.witness)
    q.require_pointed()
    ext = q.without_family()
    window = q.family.window if q.family is not None else q.vertices
    infinite_back = q.family is not None and q.family.kind in ("LineBiInfinite", "LineLeftInfinite")
    if infinite_back:
        virt = _virtual_names(q, depth + 2)
        chain = [window[0]] + virt
        arrows = [(a.src, a.dst) for a in ext.arrows] + [(chain[i + 1], chain[i]) for i in range(len(virt))]
        ext = ValuedQuiver.build(list(q.vertices) + virt, arrows)
    pred = {v: None for v in ext.vertices}
    for a in ext.arrows:
        pred[a.dst] = a.src
    loewy = {}
    for v in ext.vertices:
        seen, u, n = {v}, pred[v], 1
        while u is not None and u not in seen:
            seen.add(u)
            u = pred[u]
            n += 1
        loewy[v] = None if u is not None else n
    if infinite_back:
        for v in window:
            loewy[v] = None
    names = [cs.shape.name for cs in shapes]
    tube = shapes[0].shape.n if len(shapes) == 1 and shapes[0].shape.kind == "ATilde" else None
    return Realization(q, ext, tuple(window), pred, loewy, "+".join(names), tube)


# ---------------------------------------------------------------------------
# Indecomposables


def classify_indecomposables(q: ValuedQuiver, dim_bound: int, field: Field = QQ,
                             realization: Optional[Realization] = None, window_only: bool = True) -> list:
    """All soc^k E_v with k <= dim_bound, as (ARNode, Representation) pairs.

    Pairwise non-isomorphism is structural (distinct socle vertex or length);
    tests confirm it through hom_space.
    """
    real = realization or realize(q, dim_bound)
    verts = real.window if window_only else real.quiver.vertices
    out = []
    for v in verts:
        for k in range(1, dim_bound + 1):
            node = ARNode(v, k)
            if real.exists(node):
                out.append((node, injective_truncation(real.quiver, v, k, field)))
    out.sort(key=lambda t: t[0].sort_key())
    return out


# ---------------------------------------------------------------------------
# Almost split sequences


@dataclass
class AlmostSplitSeq:
    node: ARNode
    middle_nodes: tuple
    right_node: ARNode
    left: Representation
    middle: DirectSum
    right: Representation
    f: Morphism  # left -> middle, the pair (i, p)
    g: Morphism  # middle -> right, the pair (q, -j)
    i: Morphism  # S^k_v -> S^{k+1}_v
    p: Morphism  # S^k_v -> S^k_v / soc
    q: Morphism  # S^{k+1}_v -> S^{k+1}_v / soc
    j: Morphism  # S^k_v / soc -> S^{k+1}_v / soc

    @property
    def summands(self) -> tuple:
        return tuple(inj.source for inj in self.middle.injections)


def _inclusion(small: Representation, big: Representation) -> Morphism:
    """Inclusion of truncations, matching basis paths by label."""
    F = small.field
    blocks = {}
    for v in small.vertices:
        pos = {lab: r for r, lab in enumerate(big.labels[v])}
        rows = [[F.zero] * small.dims[v] for _ in range(big.dims[v])]
        for c, lab in enumerate(small.labels[v]):
            rows[pos[lab]][c] = F.one
        blocks[v] = Matrix(F, big.dims[v], small.dims[v], rows)
    return Morphism(small, big, blocks)


def _pair_into(parts: list, target: DirectSum) -> Morphism:
    out = None
    for h, inj in zip(parts, target.injections):
        term = inj @ h
        out = term if out is None else out + term
    return out


def _pair_from(parts: list, source: DirectSum) -> Morphism:
    out = None
    for h, proj in zip(parts, source.projections):
        term = h @ proj
        out = term if out is None else out + term
    return out


def sequence_shape(real: Realization, node: ARNode) -> tuple[tuple, ARNode]:
    if not real.exists(node):
        raise ValueError(f"{node} does not exist")
    if real.is_injective(node):
        raise InjectiveNode(f"{node} is injective; no almost split sequence starts there")
    u = real.pred[node.vertex]
    middle = [ARNode(node.vertex, node.level + 1)]
    if node.level > 1:
        middle.append(ARNode(u, node.level - 1))
    return tuple(middle), ARNode(u, node.level)


def ar_sequence(q: ValuedQuiver, node: ARNode, field: Field = QQ,
                realization: Optional[Realization] = None) -> AlmostSplitSeq:
    real = realization or realize(q, node.level + 1)
    middle_nodes, right_node = sequence_shape(real, node)
    Q, v, k = real.quiver, node.vertex, node.level
    L = injective_truncation(Q, v, k, field)
    M1 = injective_truncation(Q, v, k + 1, field)
    i = _inclusion(L, M1)
    L_top, p = quotient_map(L, socle(L))
    R, qmap = quotient_map(M1, socle(M1))
    j = induced_map(i, p, qmap)
    mid = direct_sum_data(M1, L_top)
    f = _pair_into([i, p], mid)
    g = _pair_from([qmap, -j], mid)
    return AlmostSplitSeq(node, middle_nodes, right_node, L, mid, R, f, g, i, p, qmap, j)


# ---------------------------------------------------------------------------
# Verification of a short exact sequence against a pool of indecomposables


def _in_span(vectors: list, target: tuple, F: Field) -> bool:
    if not any(not F.is_zero(x) for x in target):
        return True
    if not vectors:
        return False
    A = Matrix.from_columns(F, len(target), vectors)
    return A.solve(target) is not None


def _non_isos(L: Representation, N: Representation) -> list:
    """Basis of the non-isomorphisms L -> N, for L with simple socle.

    Every nonzero subobject of L contains its simple socle, so h fails to be
    injective exactly when it kills the socle; between objects of equal
    dimension that is the same as failing to be an isomorphism.
    """
    basis = hom_space(L, N)
    if L.dims != N.dims or not basis:
        return basis
    soc = socle(L)
    if soc.total_dim != 1:
        raise ValueError("left term must have a simple socle")
    (sv,) = [v for v in L.vertices if soc.spaces[v].dim]
    s = soc.spaces[sv].basis[0]
    F = L.field
    rows = [f.blocks[sv].apply(s) for f in basis]
    # coefficients c with sum c_t f_t(s) = 0
    A = Matrix.from_columns(F, N.dims[sv], rows)
    out = []
    for coeffs in A.nullspace():
        h = None
        for c, f in zip(coeffs, basis):
            if not F.is_zero(c):
                term = f.scale(c)
                h = term if h is None else h + term
        out.append(h if h is not None else Morphism.zero(L, N))
    return out


def check_exact(f: Morphism, g: Morphism) -> list:
    problems = []
    L, M, R = f.source, f.target, g.target
    if M.total_dim != L.total_dim + R.total_dim:
        problems.append(("dimension", f"{M.total_dim} != {L.total_dim} + {R.total_dim}"))
    if not (g @ f).is_zero():
        problems.append(("composite", "g f is not zero"))
    if f.rank() != L.total_dim:
        problems.append(("injective", "left map is not injective"))
    if g.rank() != R.total_dim:
        problems.append(("surjective", "right map is not surjective"))
    return problems


def is_split_mono(f: Morphism) -> bool:
    """Is there r: M -> L with r f = id_L?"""
    L, M = f.source, f.target
    F = L.field
    basis = hom_space(M, L)
    target = Morphism.identity(L).flat()
    return _in_span([(r @ f).flat() for r in basis], target, F)


def verify_almost_split(q: ValuedQuiver, seq, pool_dim_bound: int = 6, pool: Optional[list] = None) -> Verdict:
    """Exactness, non-splitness and the left almost split factoring property.

    ``seq`` is an AlmostSplitSeq or any pair-like object with ``f`` and ``g``.
    The pool defaults to every soc^k E_v (k <= pool_dim_bound) on the same
    finite quiver as the sequence. All failures are collected in
    ``extra["failures"]``; the witness is the first one.
    """
    if pool_dim_bound > 8:
        raise DimensionBoundExceeded("pool bound above 8 is not supported")
    f, g = seq.f, seq.g
    L = f.source
    F = L.field
    failures = []
    for kind, detail in check_exact(f, g):
        failures.append({"kind": kind, "detail": detail})
    if is_split_mono(f):
        failures.append({"kind": "split", "detail": "the left map has a retraction"})
    if pool is None:
        pool = truncation_pool(L.quiver, pool_dim_bound, F)
    M = f.target
    for node, N in pool:
        needed = _non_isos(L, N)
        if not needed:
            continue
        through = [(h @ f).flat() for h in hom_space(M, N)]
        for h in needed:
            if not _in_span(through, h.flat(), F):
                failures.append({"kind": "factor", "module": str(node), "detail": f"a map {L.dim_vector} -> {node} does not factor"})
                break
    if failures:
        first = failures[0]
        return Verdict(False, Witness(first["kind"], detail=first.get("module", "") or first["detail"]),
                       extra={"failures": failures})
    return Verdict(True, extra={"failures": []})


def truncation_pool(q: ValuedQuiver, bound: int, field: Field = QQ) -> list:
    """Every distinct soc^k E_v on a finite quiver with k <= bound."""
    pool = []
    for v in q.vertices:
        prev = 0
        for k in range(1, bound + 1):
            T = injective_truncation(q, v, k, field)
            if T.total_dim == prev:
                break
            prev = T.total_dim
            pool.append((ARNode(v, k), T))
    return pool


# ---------------------------------------------------------------------------
# The quiver itself


@dataclass
class ARQuiver:
    realization: Realization
    depth: int
    nodes: list
    arrows: list  # (ARNode, ARNode), irreducible maps
    tau: dict  # right end -> left end
    sequences: dict  # left end -> (middle nodes, right node)
    injective: list
    tube_rank: Optional[int] = None

    @property
    def shape(self) -> str:
        return self.realization.shape

    def in_arrows(self, node: ARNode) -> list:
        return [a for a, b in self.arrows if b == node]

    def out_arrows(self, node: ARNode) -> list:
        return [b for a, b in self.arrows if a == node]

    def tau_power(self, node: ARNode, n: int) -> Optional[ARNode]:
        for _ in range(n):
            node = self.tau.get(node)
            if node is None:
                return None
        return node

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "depth": self.depth,
            "tube_rank": self.tube_rank,
            "nodes": [n.name for n in self.nodes],
            "injective": [n.name for n in self.injective],
            "arrows": [[a.name, b.name] for a, b in self.arrows],
            "tau": [[x.name, y.name] for x, y in sorted(self.tau.items(), key=lambda t: t[0].sort_key())],
            "sequences": [
                {"left": n.name, "middle": [m.name for m in mid], "right": r.name}
                for n, (mid, r) in sorted(self.sequences.items(), key=lambda t: t[0].sort_key())
            ],
            "orbits": [o.to_json() for o in tau_orbit_report(self)],
        }

    def to_dot(self, name: str = "AR") -> str:
        """Solid arrows for irreducible maps, dashed arrows X -> tau(X)."""
        lines = [f"digraph {dot_id(name)} {{"]
        for n in self.nodes:
            lines.append(f'  {dot_id(n.name)} [label="{n.name}"];')
        for a, b in self.arrows:
            lines.append(f"  {dot_id(a.name)} -> {dot_id(b.name)};")
        for x, y in sorted(self.tau.items(), key=lambda t: t[0].sort_key()):
            lines.append(f"  {dot_id(x.name)} -> {dot_id(y.name)} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ar_quiver(q: ValuedQuiver, depth: int) -> ARQuiver:
    if depth < 1:
        raise ValueError("depth must be at least 1")
    real = realize(q, depth)
    nodes = [ARNode(v, k) for v in real.window for k in range(1, depth + 1) if real.exists(ARNode(v, k))]
    nodes.sort(key=ARNode.sort_key)
    present = set(nodes)
    arrows, tau, seqs, injective = set(), {}, {}, []
    for node in nodes:
        if real.is_injective(node):
            injective.append(node)
            continue
        middle, right = sequence_shape(real, node)
        seqs[node] = (middle, right)
        for m in middle:
            if m in present:
                arrows.add((node, m))
                if right in present:
                    arrows.add((m, right))
        if right in present:
            tau[right] = node
    arrow_list = sorted(arrows, key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    return ARQuiver(real, depth, nodes, arrow_list, tau, seqs, injective, real.tube_rank)


@dataclass
class TauOrbit:
    level: Optional[int]
    nodes: tuple
    cyclic: bool
    uniform_level: bool

    def to_json(self) -> dict:
        return {"level": self.level, "nodes": [n.name for n in self.nodes], "cyclic": self.cyclic,
                "uniform_level": self.uniform_level}


def tau_orbit_report(arq: ARQuiver) -> list:
    """tau-orbits listed in tau order, each checked for constant level."""
    has_preimage = set(arq.tau.values())
    seen = set()
    out = []

    def walk(start):
        orbit = [start]
        seen.add(start)
        cur = start
        while cur in arq.tau and arq.tau[cur] not in seen:
            cur = arq.tau[cur]
            orbit.append(cur)
            seen.add(cur)
        return orbit

    # open chains first start where nothing translates to them, then cycles
    starts = [n for n in arq.nodes if n not in has_preimage] + list(arq.nodes)
    for start in starts:
        if start in seen:
            continue
        orbit = walk(start)
        cyclic = arq.tau.get(orbit[-1]) == orbit[0]
        levels = {n.level for n in orbit}
        level = orbit[0].level if len(levels) == 1 else None
        out.append(TauOrbit(level, tuple(orbit), cyclic, len(levels) == 1))
    out.sort(key=lambda o: min(n.sort_key() for n in o.nodes))
    return out


# ---------------------------------------------------------------------------
# Brute-force oracle


def brute_force_indecomposables(q: ValuedQuiver, max_dim: int = 3, field: PrimeField = GF2) -> list:
    """Every indecomposable nilpotent representation up to max_dim, up to isomorphism.

    Exhaustive over all matrices with entries in a small prime field.
    """
    if max_dim > 4:
        raise DimensionBoundExceeded("brute force is limited to total dimension 4")
    q.require_pointed()
    keys = q.arrow_keys()
    verts = q.vertices
    found: list = []
    for dv in itertools.product(range(max_dim + 1), repeat=len(verts)):
        total = sum(dv)
        if total == 0 or total > max_dim:
            continue
        dims = dict(zip(verts, dv))
        shapes = [(dims[k.dst], dims[k.src]) for k in keys]
        n_entries = sum(r * c for r, c in shapes)
        if field.p ** n_entries > 1 << 16:
            raise DimensionBoundExceeded("too many matrices to enumerate")
        reps_here: list = []
        for entries in itertools.product(field.elements(), repeat=n_entries):
            maps, pos = {}, 0
            for key, (r, c) in zip(keys, shapes):
                flat = entries[pos: pos + r * c]
                pos += r * c
                maps[key] = Matrix(field, r, c, [flat[x * c:(x + 1) * c] for x in range(r)])
            m = Representation(q, dims, maps, field, check=False)
            try:
                check_nilpotent(m)
            except NotNilpotent:
                continue
            if not is_indecomposable(m):
                continue
            if any(is_isomorphic(m, other) for other in reps_here):
                continue
            reps_here.append(m)
        found.extend(reps_here)
    return found


def matches_truncation(m: Representation, q: ValuedQuiver, max_level: int) -> Optional[ARNode]:
    """The node (v, k) with m isomorphic to soc^k E_v, if any."""
    for v in q.vertices:
        for k in range(1, max_level + 1):
            T = injective_truncation(q, v, k, m.field)
            if T.dims == m.dims and is_isomorphic(m, T):
                return ARNode(v, k)
    return None
