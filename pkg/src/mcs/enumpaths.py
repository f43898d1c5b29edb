"""Enumerate and count all minimal common supersequences of two strings.

Each start-to-end path of the st-subgraph spells exactly one MCS of the
prefix-stripped pair; the stripped common prefix is glued back on.
"""
from __future__ import annotations

from typing import Iterator

from .core import Seq, like, longest_common_prefix
from .enumgraph import EnumGraph, _targets, build_st_subgraph


def split_common_prefix(a: Seq, b: Seq):
    """Return ``(prefix, x, y, fixed)`` where ``fixed`` short-circuits the graph."""
    p = longest_common_prefix(a, b)
    x, y = a[p:], b[p:]
    if not x:
        return a[:p], x, y, b
    if not y:
        return a[:p], x, y, a
    return a[:p], x, y, None


def _walk(g: EnumGraph, prefix, probe=None) -> Iterator[Seq]:
    """Depth-first over st-paths, start (A,0,B,0) first, ``y'`` ascending.

    ``probe`` (a list) receives, per emitted string, the edge-scan steps plus
    backtrack steps spent since the previous emission.
    """
    strings = g.strings
    good = g.on_path
    best = g.max_target
    na, nb = len(g.a), len(g.b)
    half = (na + 2) * (nb + 2)
    strides = (nb + 2, na + 2)
    bases = (0, half)
    ends = set(g.ends())
    steps = [0]
    template = g.a
    buf = list(prefix)

    for root in g.starts():
        if not good[root]:
            continue
        side, x, y = g.unvid(root)
        # frame: side, y (label start), edge stream, buffer length on entry
        stack = [(side, y, _targets(strings[side], strings[1 - side], x, y, best[root], steps), len(buf))]
        while stack:
            side, y, gen, mark = stack[-1]
            y_str = strings[1 - side]
            tside = 1 - side
            for yp, xp in gen:
                w = bases[tside] + yp * strides[tside] + xp
                if not good[w]:
                    continue
                del buf[mark:]
                buf.extend(y_str[max(y, 1) - 1:min(yp, len(y_str))])
                if w in ends:
                    if probe is not None:
                        probe.append(steps[0])
                        steps[0] = 0
                    yield like(template, buf)
                    continue
                stack.append((tside, xp, _targets(y_str, strings[side], yp, xp, best[w], steps), len(buf)))
                break
            else:
                stack.pop()
                steps[0] += 1
        del buf[len(prefix):]


def enumerate_mcs(a: Seq, b: Seq, graph: EnumGraph | None = None) -> Iterator[Seq]:
    prefix, x, y, fixed = split_common_prefix(a, b)
    if fixed is not None:
        yield fixed
        return
    g = graph if graph is not None else build_st_subgraph(x, y)
    yield from _walk(g, prefix)


def count_paths(g: EnumGraph) -> int:
    """Number of start-to-end paths, by memoised post-order over the DAG."""
    strings = g.strings
    good = g.on_path
    best = g.max_target
    na, nb = len(g.a), len(g.b)
    half = (na + 2) * (nb + 2)
    strides = (nb + 2, na + 2)
    bases = (0, half)
    count = {e: 1 for e in g.ends() if good[e]}
    total = 0
    for root in g.starts():
        if not good[root]:
            continue
        side, x, y = g.unvid(root)
        # frame: vertex id, side, edge stream, running sum, child in flight
        stack = [[root, side, _targets(strings[side], strings[1 - side], x, y, best[root]), 0, -1]]
        while stack:
            frame = stack[-1]
            v, side, gen = frame[0], frame[1], frame[2]
            if frame[4] >= 0:
                frame[3] += count[frame[4]]
                frame[4] = -1
            tside = 1 - side
            for yp, xp in gen:
                w = bases[tside] + yp * strides[tside] + xp
                if not good[w]:
                    continue
                c = count.get(w)
                if c is None:
                    frame[4] = w
                    stack.append([w, tside, _targets(strings[tside], strings[side], yp, xp, best[w]), 0, -1])
                    break
                frame[3] += c
            else:
                count[v] = frame[3]
                stack.pop()
        total += count[root]
    return total


def count_mcs(a: Seq, b: Seq) -> int:
    _, x, y, fixed = split_common_prefix(a, b)
    if fixed is not None:
        return 1
    return count_paths(build_st_subgraph(x, y))


def delay_probe(a: Seq, b: Seq, limit: int | None = None) -> list[int]:
    """Work between consecutive outputs (first entry: work before the first).

    Work is counted as edge-scan steps plus backtracking pops; graph
    construction is excluded.  With ``limit`` the walk stops after that
    many outputs.
    """
    prefix, x, y, fixed = split_common_prefix(a, b)
    if fixed is not None:
        return [0]
    probe = []
    for k, _ in enumerate(_walk(build_st_subgraph(x, y), prefix, probe), 1):
        if limit is not None and k >= limit:
            break
    return probe
