"""Finite acyclic quivers: parsing, paths, and the canonical representations.

The quiver file format is line-oriented UTF-8 text:

    # comment
    vertex <name>
    arrow <name> <source> <target>

The order of ``vertex`` lines fixes vertex indices, which in turn fix every
basis and matrix of the canonical projective/injective/simple representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CycleDetectedError,
    DanglingEndpointError,
    DuplicateNameError,
    QuiverSyntaxError,
)
from .linalg import RATIONALS, Field, Mat


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic directed multigraph with named vertices and arrows."""

    vertices: tuple[str, ...]
    arrows: tuple[ArrowDecl, ...]

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise DuplicateNameError(f"duplicate vertex name {v!r}")
            seen.add(v)
        aseen = set()
        vset = set(self.vertices)
        for a in self.arrows:
            if a.name in aseen:
                raise DuplicateNameError(f"duplicate arrow name {a.name!r}")
            aseen.add(a.name)
            if a.source not in vset:
                raise DanglingEndpointError(f"arrow {a.name!r} starts at unknown vertex {a.source!r}")
            if a.target not in vset:
                raise DanglingEndpointError(f"arrow {a.name!r} ends at unknown vertex {a.target!r}")
        self.topological_order  # acyclicity check happens here

    @cached_property
    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def arrows_from(self) -> tuple[tuple[int, ...], ...]:
        """Arrow indices leaving each vertex, in arrow order."""
        out = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            out[self.vertex_index[a.source]].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def arrows_into(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            inc[self.vertex_index[a.target]].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        """Vertex indices in a topological order; raises CycleDetectedError."""
        indeg = [0] * self.n_vertices
        for a in self.arrows:
            indeg[self.vertex_index[a.target]] += 1
        ready = [i for i in range(self.n_vertices) if indeg[i] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for ai in self.arrows_from[v]:
                t = self.vertex_index[self.arrows[ai].target]
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        if len(order) != self.n_vertices:
            raise CycleDetectedError("quiver contains an oriented cycle")
        return tuple(order)

    @cached_property
    def opposite(self) -> "Quiver":
        return Quiver(self.vertices,
                      tuple(ArrowDecl(a.name, a.target, a.source) for a in self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arrows})"


@dataclass(frozen=True)
class Path:
    """Directed path given by its arrow index sequence; empty = trivial path."""

    source: int
    target: int
    arrows: tuple[int, ...]

    def __len__(self):
        return len(self.arrows)


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver file format; every error carries a line number."""
    vertices: list[str] = []
    arrows: list[ArrowDecl] = []
    vseen: set[str] = set()
    aseen: set[str] = set()
    reach: dict[str, set[str]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise QuiverSyntaxError("expected 'vertex <name>'", line=lineno)
            if parts[1] in vseen:
                raise DuplicateNameError(f"duplicate vertex name {parts[1]!r}", line=lineno)
            vseen.add(parts[1])
            vertices.append(parts[1])
            reach[parts[1]] = set()
        elif parts[0] == "arrow":
            if len(parts) != 4:
                raise QuiverSyntaxError("expected 'arrow <name> <source> <target>'", line=lineno)
            name, src, tgt = parts[1], parts[2], parts[3]
            if name in aseen:
                raise DuplicateNameError(f"duplicate arrow name {name!r}", line=lineno)
            aseen.add(name)
            if src not in vseen:
                raise DanglingEndpointError(f"arrow {name!r} starts at unknown vertex {src!r}", line=lineno)
            if tgt not in vseen:
                raise DanglingEndpointError(f"arrow {name!r} ends at unknown vertex {tgt!r}", line=lineno)
            if src == tgt or src in reach[tgt]:
                raise CycleDetectedError(
                    f"arrow {name!r} closes an oriented cycle", line=lineno)
            # the new arrow makes tgt (and whatever it reached) reachable
            # from src and from everything that already reached src
            newly = {tgt} | reach[tgt]
            for v, r in reach.items():
                if v == src or src in r:
                    r.update(newly)
            arrows.append(ArrowDecl(name, src, tgt))
        else:
            raise QuiverSyntaxError(f"unknown directive {parts[0]!r}", line=lineno)
    return Quiver(tuple(vertices), tuple(arrows))


def paths_between(q: Quiver, x: str, y: str) -> list[Path]:
    """All directed paths x -> y, ordered by length then lexicographically
    by arrow index sequence.  Includes the trivial path when x == y."""
    if x not in q.vertex_index:
        raise KeyError(f"unknown vertex {x!r}")
    if y not in q.vertex_index:
        raise KeyError(f"unknown vertex {y!r}")
    xi, yi = q.vertex_index[x], q.vertex_index[y]
    found: list[Path] = []

    def walk(v: int, acc: list[int]):
        if v == yi:
            found.append(Path(xi, yi, tuple(acc)))
        for ai in q.arrows_from[v]:
            acc.append(ai)
            walk(q.vertex_index[q.arrows[ai].target], acc)
            acc.pop()

    walk(xi, [])
    found.sort(key=lambda p: (len(p.arrows), p.arrows))
    return found


def all_paths_from(q: Quiver, x: str) -> dict[int, list[Path]]:
    """Paths from x to every vertex, keyed by target vertex index."""
    return {q.vertex_index[y]: paths_between(q, x, y) for y in q.vertices}


def compose_paths(first: Path, then: Path) -> Path:
    """Concatenate: traverse `first`, then `then`."""
    if first.target != then.source:
        raise ValueError("paths do not compose")
    return Path(first.source, then.target, first.arrows + then.arrows)


def projective_at(q: Quiver, x: str, field: Field = RATIONALS):
    """Indecomposable projective P_x: basis of P_x(y) is the path list x -> y,
    arrows act by appending to the path."""
    from .reps import Representation

    paths = all_paths_from(q, x)
    index = {vi: {p.arrows: k for k, p in enumerate(ps)} for vi, ps in paths.items()}
    dims = tuple(len(paths[vi]) for vi in range(q.n_vertices))
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        m = [[field.zero] * dims[si] for _ in range(dims[ti])]
        for k, p in enumerate(paths[si]):
            m[index[ti][p.arrows + (ai,)]][k] = field.one
        action.append(Mat(field, dims[ti], dims[si], tuple(tuple(r) for r in m)))
    return Representation(q, field, dims, tuple(action))


def injective_at(q: Quiver, x: str, field: Field = RATIONALS):
    """Indecomposable injective I_x: basis of I_x(y) is the path list y -> x,
    arrows act by stripping the first arrow (left truncation)."""
    from .reps import Representation

    paths = {q.vertex_index[y]: paths_between(q, y, x) for y in q.vertices}
    index = {vi: {p.arrows: k for k, p in enumerate(ps)} for vi, ps in paths.items()}
    dims = tuple(len(paths[vi]) for vi in range(q.n_vertices))
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        m = [[field.zero] * dims[si] for _ in range(dims[ti])]
        for k, p in enumerate(paths[si]):
            if p.arrows and p.arrows[0] == ai:
                m[index[ti][p.arrows[1:]]][k] = field.one
        action.append(Mat(field, dims[ti], dims[si], tuple(tuple(r) for r in m)))
    return Representation(q, field, dims, tuple(action))


def simple_at(q: Quiver, x: str, field: Field = RATIONALS):
    """Simple S_x: one-dimensional at x, zero elsewhere."""
    from .reps import Representation

    xi = q.vertex_index[x]
    dims = tuple(1 if i == xi else 0 for i in range(q.n_vertices))
    action = []
    for a in q.arrows:
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        action.append(Mat.zero(field, dims[ti], dims[si]))
    return Representation(q, field, dims, tuple(action))
