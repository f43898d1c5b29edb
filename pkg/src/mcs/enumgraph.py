"""The bipartite supersequence graph of two strings and its st-subgraph.

A vertex ``(X, x, Y, y)`` says: the previous block was taken from ``X``
and ended at ``x``; the next block is taken from ``Y`` starting at ``y``.
An edge to ``(Y, y', X, x')`` emits ``Y[y..y']`` while ``X(x, x')`` is the
part of ``X`` absorbed by that block.  Start nodes are ``(A,0,B,0)`` and
``(B,0,A,0)``; end nodes put both cursors one past the end.

Fill bounds
-----------
``l(x, y, y')`` is the largest ``x'`` with ``X[x+1..x'-1]`` a subsequence
of ``Y[y..y']`` (index 0 of ``Y`` is ignored, and ``x'`` may reach
``|X|+1``).  Growing ``y'`` by one moves it forward by at most one, so a
whole row costs O(|Y|).  An edge exists at ``y'`` iff the closed row
(from ``y``) and the open row (from ``y+1``) agree on ``x'`` and the rows
started at ``x-1`` stay strictly below it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .core import ExtInterval, Seq

NAMES = ("A", "B")


class Vertex(NamedTuple):
    consumed: str
    x: int
    emit: str
    y: int

    def __str__(self):
        return "(%s,%d,%s,%d)" % self


class Edge(NamedTuple):
    source: Vertex
    target: Vertex
    label: ExtInterval

    def label_text(self, y_str: Seq) -> Seq:
        return self.label.of(y_str)


def fill_bound_row(x_str: Seq, y_str: Seq, x: int, y: int) -> Iterator[int]:
    """Yield ``l(x, y, y')`` for ``y' = y-1, y, ..., |Y|``."""
    nx = len(x_str)
    lx = x + 1
    yield lx
    for yp in range(y, len(y_str) + 1):
        if yp >= 1 and lx <= nx and x_str[lx - 1] == y_str[yp - 1]:
            lx += 1
        yield lx


def fill_bound(x_str: Seq, y_str: Seq, x: int, lo: int, hi: int) -> int:
    """``l`` evaluated on the indices ``lo..hi`` of ``Y`` (clipped to 1..|Y|)."""
    nx = len(x_str)
    lx = x + 1
    for t in range(max(lo, 1), min(hi, len(y_str)) + 1):
        if lx <= nx and x_str[lx - 1] == y_str[t - 1]:
            lx += 1
    return lx


def fills(x_str: Seq, x: int, xp: int, y_str: Seq, j: ExtInterval) -> bool:
    """Whether ``(x, x')`` fills ``J`` in ``Y`` using ``X``."""
    if not 0 <= x < xp <= len(x_str) + 1:
        return False
    r = j.indices(len(y_str))
    lo, hi = (r.start, r.stop - 1) if r else (1, 0)
    if fill_bound(x_str, y_str, x, lo, hi) != xp:
        return False
    return x == 0 or fill_bound(x_str, y_str, x - 1, lo, hi) < xp


def _targets(x_str, y_str, x, y, stop=None, steps=None):
    """Yield ``(y', x')`` for every out-edge of ``(X, x, Y, y)``, ascending.

    ``stop`` bounds ``y'``; ``steps`` (one-element list) accumulates the
    number of row advances performed.
    """
    nx = len(x_str)
    ny = len(y_str)
    if x > nx or y > ny:
        return
    last = ny + 1 if stop is None else min(stop, ny + 1)
    lc = lo = x + 1
    if x > 0:
        lcm = lom = x
    else:
        # the row started at x-1 = -1 never constrains
        lcm = lom = -1
    start = y if y > 0 else 1
    done = start - 1
    for yp in range(start, min(last, ny) + 1):
        c = y_str[yp - 1]
        if lc <= nx and x_str[lc - 1] == c:
            lc += 1
        if lcm > 0 and lcm <= nx and x_str[lcm - 1] == c:
            lcm += 1
        if yp > y:
            if lo <= nx and x_str[lo - 1] == c:
                lo += 1
            if lom > 0 and lom <= nx and x_str[lom - 1] == c:
                lom += 1
        if lc == lo and lcm < lc and lom < lo:
            if steps is not None:
                steps[0] += yp - done
                done = yp
            yield yp, lc
    if last == ny + 1 and start <= ny and lc == lo and lcm < lc and lom < lo:
        if steps is not None:
            steps[0] += ny + 1 - done
            done = ny + 1
        yield ny + 1, lc
    if steps is not None:
        steps[0] += max(min(last, ny) - done, 0)


@dataclass
class EnumGraph:
    """Vertices of the st-subgraph plus the largest edge target per vertex.

    ``a`` and ``b`` are the strings the graph was built on (no common
    prefix).  Vertex ``(side, x, y)`` uses ``X = (a, b)[side]`` and lives at
    flat index :meth:`vid`.
    """

    a: Seq
    b: Seq
    on_path: bytearray
    max_target: list

    @classmethod
    def empty(cls) -> "EnumGraph":
        return cls("", "", bytearray(8), [-1] * 8)

    @property
    def strings(self):
        return (self.a, self.b)

    def vid(self, side: int, x: int, y: int) -> int:
        na, nb = len(self.a), len(self.b)
        if side == 0:
            return x * (nb + 2) + y
        return (na + 2) * (nb + 2) + x * (na + 2) + y

    def unvid(self, v: int) -> tuple[int, int, int]:
        na, nb = len(self.a), len(self.b)
        half = (na + 2) * (nb + 2)
        if v < half:
            return (0,) + divmod(v, nb + 2)
        return (1,) + divmod(v - half, na + 2)

    def vertex(self, v: int) -> Vertex:
        side, x, y = self.unvid(v)
        return Vertex(NAMES[side], x, NAMES[1 - side], y)

    def vid_of(self, vert: Vertex) -> int:
        return self.vid(NAMES.index(vert.consumed), vert.x, vert.y)

    def __contains__(self, vert: Vertex) -> bool:
        side = NAMES.index(vert.consumed)
        nx, ny = len(self.strings[side]), len(self.strings[1 - side])
        if not (0 <= vert.x <= nx + 1 and 0 <= vert.y <= ny + 1):
            return False
        return bool(self.on_path[self.vid(side, vert.x, vert.y)])

    def __len__(self):
        return sum(self.on_path)

    def vertices(self) -> list[Vertex]:
        return sorted(self.vertex(v) for v, f in enumerate(self.on_path) if f)

    def starts(self) -> list[int]:
        return [self.vid(0, 0, 0), self.vid(1, 0, 0)]

    def ends(self) -> list[int]:
        na, nb = len(self.a), len(self.b)
        return [self.vid(0, na + 1, nb + 1), self.vid(1, nb + 1, na + 1)]

    def max_y(self, vert: Vertex) -> int:
        """Largest ``y'`` of an edge from ``vert`` into the st-subgraph, or -1."""
        return self.max_target[self.vid_of(vert)]

    def edges(self, vert: Vertex) -> Iterator[Edge]:
        """Out-edges of ``vert`` that stay inside the st-subgraph."""
        for e in edges_from((self.a, self.b), vert, stop=self.max_y(vert)):
            if e.target in self:
                yield e


def edges_from(strings, v: Vertex, stop: int | None = None) -> Iterator[Edge]:
    """All out-edges of ``v`` in the full graph of ``strings = (A, B)``."""
    side = NAMES.index(v.consumed)
    x_str, y_str = strings[side], strings[1 - side]
    for yp, xp in _targets(x_str, y_str, v.x, v.y, stop):
        yield Edge(v, Vertex(v.emit, yp, v.consumed, xp), ExtInterval.closed_open(v.y, yp + 1))


def build_st_subgraph(a: Seq, b: Seq) -> EnumGraph:
    """Keep exactly the vertices lying on some start-to-end path.

    One iterative depth-first search from both start nodes; a vertex is
    kept once some out-edge reaches a kept vertex or it is an end node.
    Edges are regenerated on demand, never stored.
    """
    na, nb = len(a), len(b)
    size = 2 * (na + 2) * (nb + 2)
    g = EnumGraph(a, b, bytearray(size), [-1] * size)
    strings = (a, b)
    state = bytearray(size)
    good = g.on_path
    best = g.max_target
    half = (na + 2) * (nb + 2)
    strides = (nb + 2, na + 2)
    bases = (0, half)
    for e in g.ends():
        good[e] = 1

    for root in g.starts():
        if state[root]:
            continue
        side, x, y = g.unvid(root)
        state[root] = 1
        # frame: vertex id, side, edge stream, child in flight, its y'
        stack = [[root, side, _targets(strings[side], strings[1 - side], x, y), -1, -1]]
        while stack:
            frame = stack[-1]
            v, side, gen, child = frame[0], frame[1], frame[2], frame[3]
            if child >= 0 and good[child]:
                good[v] = 1
                best[v] = frame[4]
            frame[3] = -1
            tside = 1 - side
            for yp, xp in gen:
                w = bases[tside] + yp * strides[tside] + xp
                if state[w] == 2:
                    if good[w]:
                        good[v] = 1
                        best[v] = yp
                    continue
                state[w] = 1
                frame[3] = w
                frame[4] = yp
                stack.append([w, tside, _targets(strings[tside], strings[side], yp, xp), -1, -1])
                break
            else:
                state[v] = 2
                stack.pop()
    for e in g.ends():
        if not state[e]:
            good[e] = 0
    return g


def _dot_quote(s) -> str:
    return '"%s"' % str(s).replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: EnumGraph) -> str:
    """Graphviz text for the st-subgraph; vertices and edges sorted."""
    lines = ["digraph mcs {"]
    verts = g.vertices()
    for vert in verts:
        lines.append("  %s;" % _dot_quote(vert))
    for vert in verts:
        side = NAMES.index(vert.emit)
        y_str = g.strings[side]
        for e in g.edges(vert):
            text = e.label_text(y_str)
            if not isinstance(text, str):
                text = " ".join(map(str, text))
            lines.append("  %s -> %s [label=%s];"
                         % (_dot_quote(e.source), _dot_quote(e.target), _dot_quote(text)))
    lines.append("}")
    return "\n".join(lines) + "\n"
