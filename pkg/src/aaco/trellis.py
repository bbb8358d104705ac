"""Minimal proper trellises and Viterbi decoding for arbitrary block codes."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from math import log
from typing import Sequence

from .code import BlockCode, Word, dlp, hamming_distance
from .errors import AlphabetMismatch, LengthMismatch


@dataclass(frozen=True)
class Trellis:
    """Layered labelled digraph.

    ``classes[i][v]`` is the sorted tuple of prefixes of length i merged into
    vertex v of layer i; vertices in a layer are ordered by their smallest
    prefix.  ``edges[i]`` lists (from, to, label) between layers i and i+1.
    """

    q: int
    n: int
    classes: tuple[tuple[tuple[Word, ...], ...], ...]
    edges: tuple[tuple[tuple[int, int, int], ...], ...]

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.classes]

    def representative(self, i: int, v: int) -> Word:
        return self.classes[i][v][0]

    def end_vertex(self, prefix: Sequence[int]) -> int:
        """Vertex reached from the root by following labels ``prefix``."""
        v = 0
        for i, a in enumerate(prefix):
            nxt = [t for f, t, lab in self.edges[i] if f == v and lab == a]
            if not nxt:
                raise KeyError(f"prefix {tuple(prefix)} is not a path")
            v = nxt[0]
        return v

    def paths(self) -> list[Word]:
        out = []

        def walk(i, v, acc):
            if i == self.n:
                out.append(tuple(acc))
                return
            for f, t, lab in self.edges[i]:
                if f == v:
                    walk(i + 1, t, acc + [lab])

        walk(0, 0, [])
        return out

    def is_proper(self) -> bool:
        for layer in self.edges:
            seen = set()
            for f, _, lab in layer:
                if (f, lab) in seen:
                    return False
                seen.add((f, lab))
        return True

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.q,
                "n": self.n,
                "layers": [
                    [{"id": [i, v], "prefixes": [list(p) for p in cls]} for v, cls in enumerate(layer)]
                    for i, layer in enumerate(self.classes)
                ],
                "edges": [
                    {"from": [i, f], "to": [i + 1, t], "label": lab}
                    for i, layer in enumerate(self.edges)
                    for f, t, lab in layer
                ],
            }
        )


def future_sets(C: BlockCode, i: int) -> dict[Word, frozenset]:
    """Map each length-i prefix to the set of its completions in C."""
    fut = defaultdict(set)
    for w in C.words:
        fut[w[:i]].add(w[i:])
    return {p: frozenset(s) for p, s in fut.items()}


def build_min_trellis(C: BlockCode) -> Trellis:
    """Vertices at layer i are prefixes grouped by identical future sets."""
    classes = []
    where = []
    for i in range(C.n + 1):
        groups = defaultdict(list)
        for p, f in future_sets(C, i).items():
            groups[f].append(p)
        layer = sorted(tuple(sorted(g)) for g in groups.values())
        classes.append(tuple(layer))
        where.append({p: v for v, cls in enumerate(layer) for p in cls})
    edges = []
    for i in range(C.n):
        layer = set()
        for p, v in where[i + 1].items():
            layer.add((where[i][p[:i]], v, p[i]))
        edges.append(tuple(sorted(layer)))
    return Trellis(C.q, C.n, tuple(classes), tuple(edges))


def viterbi_decode(T: Trellis, received: Sequence[int]) -> list[Word]:
    """All codewords at minimum Hamming distance from ``received``, sorted."""
    received = tuple(received)
    if len(received) != T.n:
        raise LengthMismatch(f"received word has length {len(received)}, expected {T.n}")
    if any(not 0 <= s < T.q for s in received):
        raise AlphabetMismatch(f"received word has symbols outside 0..{T.q - 1}")
    # survivors: prefix -> (end vertex, distance to received prefix)
    survivors = {(): (0, 0)}
    for i in range(T.n):
        incoming = defaultdict(list)
        for f, t, lab in T.edges[i]:
            incoming[t].append((f, lab))
        nxt = {}
        for v in range(len(T.classes[i + 1])):
            cand = []
            for w, (end, dist) in survivors.items():
                for f, lab in incoming[v]:
                    if f == end:
                        cand.append((w + (lab,), dist + (lab != received[i])))
            if not cand:
                continue
            best = min(d for _, d in cand)
            for w, d in cand:
                if d == best:
                    nxt[w] = (v, d)
        survivors = nxt
    return sorted(survivors)


def nearest_codewords(C: BlockCode, received: Sequence[int]) -> tuple[list[Word], int]:
    """Brute-force nearest set, kept as the reference the trellis decoder is checked against."""
    dists = [(hamming_distance(w, received), w) for w in C.words]
    best = min(d for d, _ in dists)
    return sorted(w for d, w in dists if d == best), best


@dataclass(frozen=True)
class VertexBoundRow:
    i: int
    vertices: int
    bound: int
    q: int

    @property
    def log_vertices(self) -> float:
        return log(self.vertices, self.q)

    @property
    def holds(self) -> bool:
        return self.bound <= 0 or self.vertices >= self.q**self.bound


def vertex_bound_report(C: BlockCode, T: Trellis) -> list[VertexBoundRow]:
    """Per layer: |V_i| against the profile bound k - k_i - k_{n-i}."""
    k = C.dimension
    profile = [0] + dlp(C)
    return [
        VertexBoundRow(i, len(T.classes[i]), k - profile[i] - profile[C.n - i], C.q)
        for i in range(C.n + 1)
    ]
