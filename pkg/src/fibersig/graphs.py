"""Decorated multigraph model of singular fibers.

A fiber of a stable map in source/target dimensions (4,3) or (5,4) is a
compact 1-complex: finitely many singular points joined by arcs of regular
points, plus some number of regular circles.  We encode it as a multigraph
whose vertices are the singular points (tagged with their local kind) and
whose edges are the regular arcs; loops are allowed, and closed regular
components are kept as a bare circle count.

Each singular kind determines the local picture of the fiber near the point
and hence the number of arc-ends meeting it (its required degree).  Some
kinds share a degree; they stay distinguishable through the kind tag and its
drawing decoration.  Where two distinct fibers share the same underlying
multigraph, they differ in how the local arc branches thread through a
singular point (for example, whether a loop at a crossing closes up one
transverse branch or turns from one branch to the other).  That residual
piece of the drawing is recorded as a small integer ``variant`` on the
vertex, defaulting to 0 for the unmarked threading.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import ParseError, ValidationError

DIM43 = (4, 3)
DIM54 = (5, 4)
DIMENSION_PAIRS = (DIM43, DIM54)


@dataclass(frozen=True)
class SingularPointKind:
    """Local singularity kind with its fiber-graph bookkeeping data.

    ``local_codimension`` is the codimension contributed by one such point,
    ``required_degree`` the number of arc-ends incident to it in the fiber
    (a loop counts twice), ``decoration`` the symbol used for it in drawings,
    and ``dimension_pairs`` the dimension pairs in which it can occur.
    """

    tag: str
    local_codimension: int
    required_degree: int
    decoration: str
    dimension_pairs: tuple


_KIND_ROWS = (
    ("definite-fold", 1, 0, "isolated-dot", DIMENSION_PAIRS),
    ("indefinite-fold", 1, 4, "crossing", DIMENSION_PAIRS),
    ("cusp", 2, 2, "cusp-23", DIMENSION_PAIRS),
    ("definite-swallowtail", 3, 0, "isolated-square", DIMENSION_PAIRS),
    ("indefinite-swallowtail", 3, 4, "tangency", DIMENSION_PAIRS),
    ("butterfly", 4, 2, "cusp-25", (DIM54,)),
    ("definite-D4", 4, 2, "arc-with-dot", (DIM54,)),
    ("indefinite-D4", 4, 6, "triple-star", (DIM54,)),
)

KINDS = {
    tag: SingularPointKind(tag, codim, degree, deco, dims)
    for tag, codim, degree, deco, dims in _KIND_ROWS
}

#: Kinds whose local fiber is an isolated point; they can never share a
#: connected component with anything else.
ISOLATED_KINDS = frozenset({"definite-fold", "definite-swallowtail"})


@dataclass(frozen=True)
class Vertex:
    """A singular point: identifier, kind tag, and threading variant."""

    id: str
    kind: str
    variant: int = 0

    def color(self):
        return (self.kind, self.variant)


def _normalize_edge(a, b):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class FiberGraph:
    """A fiber as a decorated multigraph plus a regular-circle count.

    Immutable after construction; edges are stored as a sorted tuple of
    unordered id pairs so equal graphs compare equal.
    """

    dimension_pair: tuple
    vertices: tuple = ()
    edges: tuple = ()
    circles: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(self._coerce_vertex(v) for v in self.vertices)
        )
        object.__setattr__(
            self,
            "edges",
            tuple(sorted(_normalize_edge(a, b) for a, b in self.edges)),
        )

    @staticmethod
    def _coerce_vertex(v):
        if isinstance(v, Vertex):
            return v
        return Vertex(*v)

    # -- basic accessors ---------------------------------------------------

    def vertex(self, vid):
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def degree(self, vid):
        d = 0
        for a, b in self.edges:
            if a == vid:
                d += 1
            if b == vid:
                d += 1
        return d

    def kind_multiset(self):
        return tuple(sorted(v.kind for v in self.vertices))

    # -- validation --------------------------------------------------------

    def problems(self):
        """Return a list of violated invariants (empty when valid)."""
        out = []
        if self.dimension_pair not in DIMENSION_PAIRS:
            out.append(f"unsupported dimension pair {self.dimension_pair}")
            return out
        ids = [v.id for v in self.vertices]
        dup = [i for i, n in Counter(ids).items() if n > 1]
        if dup:
            out.append(f"duplicate vertex ids: {sorted(dup)}")
        known = set(ids)
        for v in self.vertices:
            if v.kind not in KINDS:
                out.append(f"vertex {v.id}: unknown kind {v.kind!r}")
                continue
            kind = KINDS[v.kind]
            if self.dimension_pair not in kind.dimension_pairs:
                out.append(
                    f"vertex {v.id}: kind {v.kind} is not legal in"
                    f" dimension pair {self.dimension_pair}"
                )
            if v.variant < 0:
                out.append(f"vertex {v.id}: negative variant {v.variant}")
        for a, b in self.edges:
            for end in (a, b):
                if end not in known:
                    out.append(f"edge ({a}, {b}) references unknown vertex {end}")
        if any(e[0] not in known or e[1] not in known for e in self.edges):
            return out
        for v in self.vertices:
            if v.kind not in KINDS:
                continue
            want = KINDS[v.kind].required_degree
            got = self.degree(v.id)
            if got != want:
                out.append(
                    f"vertex {v.id} ({v.kind}) has degree {got},"
                    f" requires {want}"
                )
        if self.circles < 0:
            out.append(f"negative regular-circle count {self.circles}")
        return out

    def validate(self):
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self

    # -- structure ---------------------------------------------------------

    def components(self):
        """Split into connected singular components (circles dropped).

        Returns a list of FiberGraph values, each with ``circles == 0``,
        one per connected component containing at least one vertex.
        """
        parent = {v.id: v.id for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v.id), []).append(v)
        out = []
        for root in sorted(groups, key=lambda r: min(v.id for v in groups[r])):
            members = {v.id for v in groups[root]}
            out.append(
                FiberGraph(
                    self.dimension_pair,
                    tuple(groups[root]),
                    tuple(e for e in self.edges if e[0] in members),
                    0,
                )
            )
        return out

    def drop_circles(self):
        if self.circles == 0:
            return self
        return FiberGraph(self.dimension_pair, self.vertices, self.edges, 0)

    def relabeled(self, mapping):
        """Return a copy with vertex ids renamed through ``mapping``."""
        return FiberGraph(
            self.dimension_pair,
            tuple(Vertex(mapping[v.id], v.kind, v.variant) for v in self.vertices),
            tuple((mapping[a], mapping[b]) for a, b in self.edges),
            self.circles,
        )

    # -- canonical labeling ------------------------------------------------

    def canonical_form(self):
        """Canonical form under color-preserving vertex relabeling.

        Vertices are grouped by (kind, variant) color; within each group all
        relabelings are tried and the lexicographically smallest edge
        encoding wins.  Catalog graphs have at most six vertices, so the
        exhaustive search is cheap.
        """
        groups = {}
        for v in self.vertices:
            groups.setdefault(v.color(), []).append(v.id)
        colors = sorted(groups)
        base = {}
        idx = 0
        for color in colors:
            base[color] = idx
            idx += len(groups[color])
        color_seq = tuple(
            color for color in colors for _ in range(len(groups[color]))
        )
        best = None
        group_orders = [
            itertools.permutations(groups[color]) for color in colors
        ]
        for assignment in itertools.product(*group_orders):
            label = {}
            for color, order in zip(colors, assignment):
                for offset, vid in enumerate(order):
                    label[vid] = base[color] + offset
            enc = tuple(
                sorted(
                    (min(label[a], label[b]), max(label[a], label[b]))
                    for a, b in self.edges
                )
            )
            if best is None or enc < best:
                best = enc
        return (self.dimension_pair, color_seq, best or (), self.circles)

    def is_isomorphic(self, other):
        """Decoration-respecting multigraph isomorphism test."""
        if self.dimension_pair != other.dimension_pair:
            return False
        if self.circles != other.circles:
            return False
        if Counter(v.color() for v in self.vertices) != Counter(
            v.color() for v in other.vertices
        ):
            return False
        if len(self.edges) != len(other.edges):
            return False
        return self.canonical_form() == other.canonical_form()

    # -- text format ---------------------------------------------------------

    def to_text(self):
        lines = [f"dim {self.dimension_pair[0]} {self.dimension_pair[1]}"]
        for v in self.vertices:
            if v.variant:
                lines.append(f"v {v.id} {v.kind} {v.variant}")
            else:
                lines.append(f"v {v.id} {v.kind}")
        for a, b in self.edges:
            lines.append(f"e {a} {b}")
        lines.append(f"circles {self.circles}")
        return "\n".join(lines) + "\n"


def parse_fiber_lines(lines, *, path=None, start_line=1, default_dim=DIM43):
    """Parse ``dim`` / ``v`` / ``e`` / ``circles`` lines into a FiberGraph.

    An empty input is the empty regular fiber in the default dimension pair.
    Blank lines and ``#`` comments are skipped.
    """
    dim = None
    vertices = []
    edges = []
    circles = 0
    for offset, raw in enumerate(lines):
        lineno = start_line + offset
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        word = parts[0]
        if word == "dim":
            if len(parts) != 3:
                raise ParseError("dim line needs two integers", lineno, path)
            try:
                dim = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError("dim line needs two integers", lineno, path)
            if dim not in DIMENSION_PAIRS:
                raise ParseError(f"unsupported dimension pair {dim}", lineno, path)
        elif word == "v":
            if len(parts) not in (3, 4):
                raise ParseError("vertex line: v <id> <kind> [variant]", lineno, path)
            variant = 0
            if len(parts) == 4:
                try:
                    variant = int(parts[3])
                except ValueError:
                    raise ParseError("vertex variant must be an integer", lineno, path)
            if parts[2] not in KINDS:
                raise ParseError(f"unknown kind {parts[2]!r}", lineno, path)
            vertices.append(Vertex(parts[1], parts[2], variant))
        elif word == "e":
            if len(parts) != 3:
                raise ParseError("edge line: e <id> <id>", lineno, path)
            edges.append((parts[1], parts[2]))
        elif word == "circles":
            if len(parts) != 2:
                raise ParseError("circles line: circles <n>", lineno, path)
            try:
                circles = int(parts[1])
            except ValueError:
                raise ParseError("circle count must be an integer", lineno, path)
        else:
            raise ParseError(f"unrecognized line {word!r}", lineno, path)
    return FiberGraph(dim or default_dim, tuple(vertices), tuple(edges), circles)


def parse_fiber_text(text, *, path=None, default_dim=DIM43):
    return parse_fiber_lines(text.splitlines(), path=path, default_dim=default_dim)
