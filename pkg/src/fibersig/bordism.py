"""Directed-graph model of the III^8 locus inside a generic bordism.

A bordism between two stable maps of closed oriented 4-manifolds is a map of
a 5-manifold into N x [0,1].  The closure of its III^8 locus is a finite
oriented graph: its boundary vertices are the isolated III^8 fibers of the
two end maps (degree one, with the fiber's sign encoded by whether the locus
leaves or enters the boundary), and its interior vertices are points with a
codimension-4 fiber.  The fiber class of an interior vertex constrains its
degree:

* IV^{0,8}, IV^{1,8} and IV^18 carry exactly one incoming and one outgoing
  arc of the locus;
* IV^22 is an eight-valent vertex, four arcs in and four out;
* every other chiral codimension-4 class meets no III^8 arc at all;
* every other achiral codimension-4 class must balance incoming against
  outgoing arcs (its incidence count with III^8 vanishes).

Because every interior vertex balances in- against out-degree, the signed
boundary count on side 0 always equals the one on side 1; that conservation
is what makes the signed III^8 count a bordism invariant of the end maps.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .catalog import catalog_54
from .errors import ParseError, ValidationError
from .graphs import DIM54

#: Interior classes whose vertex passes one III^8 arc through (in 1, out 1).
PASS_THROUGH_CLASSES = frozenset({"IV^{0,8}", "IV^{1,8}", "IV^18"})

#: The eight-valent interior class (in 4, out 4).
EIGHT_VALENT_CLASS = "IV^22"


def _codim4_classes():
    return {c.name: c for c in catalog_54().by_kappa(4)}


@dataclass(frozen=True)
class LocusGraph:
    """Oriented graph of the closed III^8 locus of a bordism.

    ``interior``: tuples (id, class-name) with a codimension-4 class name;
    ``boundary``: tuples (id, side, sign) with side 0 or 1 and sign +-1;
    ``edges``: directed (tail-id, head-id) pairs, repeats allowed.
    """

    interior: tuple = ()
    boundary: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "interior", tuple(tuple(v) for v in self.interior))
        object.__setattr__(self, "boundary", tuple(tuple(v) for v in self.boundary))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    def degrees(self):
        out = Counter(tail for tail, _ in self.edges)
        into = Counter(head for _, head in self.edges)
        return into, out

    def problems(self):
        """Check every per-vertex rule; returns one message per violation."""
        out = []
        ids = [v[0] for v in self.interior] + [v[0] for v in self.boundary]
        dup = [i for i, n in Counter(ids).items() if n > 1]
        if dup:
            out.append(f"duplicate vertex ids: {sorted(dup)}")
        known = set(ids)
        for tail, head in self.edges:
            for end in (tail, head):
                if end not in known:
                    out.append(f"edge ({tail}, {head}) references unknown vertex {end}")
        into, outof = self.degrees()
        classes = _codim4_classes()
        for vid, side, sign in self.boundary:
            if side not in (0, 1):
                out.append(f"boundary vertex {vid}: side must be 0 or 1")
                continue
            if sign not in (1, -1):
                out.append(f"boundary vertex {vid}: sign must be +1 or -1")
                continue
            deg = into[vid] + outof[vid]
            if deg != 1:
                out.append(f"boundary vertex {vid} has degree {deg}, requires 1")
                continue
            outgoing = outof[vid] == 1
            derived = (1 if outgoing else -1) if side == 0 else (-1 if outgoing else 1)
            if sign != derived:
                out.append(
                    f"boundary vertex {vid} (side {side}) carries sign {sign:+d}"
                    f" but its arc direction encodes {derived:+d}"
                )
        for vid, class_name in self.interior:
            cls = classes.get(class_name)
            if cls is None:
                out.append(
                    f"interior vertex {vid}: {class_name!r} is not a"
                    " codimension-4 class"
                )
                continue
            i, o = into[vid], outof[vid]
            if class_name in PASS_THROUGH_CLASSES:
                if (i, o) != (1, 1):
                    out.append(
                        f"interior vertex {vid} ({class_name}) has in={i}"
                        f" out={o}, requires in=1 out=1"
                    )
            elif class_name == EIGHT_VALENT_CLASS:
                if (i, o) != (4, 4):
                    out.append(
                        f"interior vertex {vid} ({class_name}) has in={i}"
                        f" out={o}, requires in=4 out=4"
                    )
            elif cls.chiral:
                if i + o != 0:
                    out.append(
                        f"interior vertex {vid} ({class_name}) is chiral and"
                        f" meets no III^8 arc, but has degree {i + o}"
                    )
            else:
                if i != o:
                    out.append(
                        f"interior vertex {vid} ({class_name}) is achiral and"
                        f" must balance, but has in={i} out={o}"
                    )
        return out

    def validate(self):
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self


def boundary_sum(graph: LocusGraph, side: int) -> int:
    """Signed count of boundary vertices on one side.

    A side-0 vertex counts +1 when its arc leaves the boundary (the locus is
    oriented away from side 0) and -1 when it enters; side 1 is mirrored.
    The count is read off the arc directions, so it stays defined even for
    deliberately corrupted graphs that skip validation.
    """
    if side not in (0, 1):
        raise ValidationError(f"side must be 0 or 1, got {side}")
    into, outof = graph.degrees()
    total = 0
    for vid, vside, _sign in graph.boundary:
        if vside != side:
            continue
        flow = outof[vid] - into[vid]
        total += flow if side == 0 else -flow
    return total


def check_invariance(graph: LocusGraph) -> bool:
    """Whether the side-0 and side-1 signed counts agree.

    For every graph passing validation this is forced by flow conservation
    at interior vertices; the function exists to assert it (and to expose
    the failure on corrupted graphs).
    """
    return boundary_sum(graph, 0) == boundary_sum(graph, 1)


def disjoint_union(*graphs):
    interior = []
    boundary = []
    edges = []
    for i, g in enumerate(graphs):
        tag = lambda vid: f"u{i}.{vid}"
        interior.extend((tag(v), c) for v, c in g.interior)
        boundary.extend((tag(v), s, sg) for v, s, sg in g.boundary)
        edges.extend((tag(a), tag(b)) for a, b in g.edges)
    return LocusGraph(tuple(interior), tuple(boundary), tuple(edges))


def reversed_graph(graph: LocusGraph) -> LocusGraph:
    """Reverse every arc and negate every boundary sign."""
    return LocusGraph(
        graph.interior,
        tuple((vid, side, -sign) for vid, side, sign in graph.boundary),
        tuple((b, a) for a, b in graph.edges),
    )


def random_locus_graph(rng: random.Random, max_interior: int = 4) -> LocusGraph:
    """Generate a random valid locus graph from legal vertex templates."""
    classes = _codim4_classes()
    achiral_names = sorted(
        n
        for n, c in classes.items()
        if not c.chiral and n != EIGHT_VALENT_CLASS
    )
    idle_chiral_names = sorted(
        n
        for n, c in classes.items()
        if c.chiral and n not in PASS_THROUGH_CLASSES
    )

    interior = []
    out_stubs = []
    in_stubs = []

    def add_interior(class_name, n_in, n_out):
        vid = f"v{len(interior)}"
        interior.append((vid, class_name))
        in_stubs.extend([vid] * n_in)
        out_stubs.extend([vid] * n_out)

    for _ in range(rng.randrange(0, max_interior + 1)):
        kind = rng.randrange(4)
        if kind == 0:
            add_interior(rng.choice(sorted(PASS_THROUGH_CLASSES)), 1, 1)
        elif kind == 1:
            add_interior(EIGHT_VALENT_CLASS, 4, 4)
        elif kind == 2:
            k = rng.randrange(0, 4)
            add_interior(rng.choice(achiral_names), k, k)
        else:
            add_interior(rng.choice(idle_chiral_names), 0, 0)

    rng.shuffle(out_stubs)
    rng.shuffle(in_stubs)
    edges = []
    boundary = []

    def add_boundary(side, sign):
        vid = f"b{len(boundary)}"
        boundary.append((vid, side, sign))
        return vid

    # Wire some interior stubs to each other, the rest to fresh boundary
    # vertices; the sign of each boundary vertex is dictated by side and
    # arc direction.
    internal = rng.randrange(0, min(len(out_stubs), len(in_stubs)) + 1)
    for _ in range(internal):
        edges.append((out_stubs.pop(), in_stubs.pop()))
    for tail in out_stubs:
        side = rng.randrange(2)
        head = add_boundary(side, -1 if side == 0 else 1)
        edges.append((tail, head))
    for head in in_stubs:
        side = rng.randrange(2)
        tail = add_boundary(side, 1 if side == 0 else -1)
        edges.append((tail, head))
    for _ in range(rng.randrange(0, 4)):
        tail_side = rng.randrange(2)
        head_side = rng.randrange(2)
        tail = add_boundary(tail_side, 1 if tail_side == 0 else -1)
        head = add_boundary(head_side, -1 if head_side == 0 else 1)
        edges.append((tail, head))
    return LocusGraph(tuple(interior), tuple(boundary), tuple(edges))


# -- text format --------------------------------------------------------------


def parse_locus_lines(lines, *, path=None):
    """Parse ``iv`` / ``bd`` / ``arc`` lines into a LocusGraph."""
    interior = []
    boundary = []
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        word = parts[0]
        if word == "iv":
            if len(parts) != 3:
                raise ParseError("interior line: iv <id> <class-name>", lineno, path)
            interior.append((parts[1], parts[2]))
        elif word == "bd":
            if len(parts) != 4:
                raise ParseError("boundary line: bd <id> <0|1> <+1|-1>", lineno, path)
            try:
                side = int(parts[2])
                sign = int(parts[3])
            except ValueError:
                raise ParseError("boundary side and sign must be integers", lineno, path)
            boundary.append((parts[1], side, sign))
        elif word == "arc":
            if len(parts) != 3:
                raise ParseError("arc line: arc <from> <to>", lineno, path)
            edges.append((parts[1], parts[2]))
        else:
            raise ParseError(f"unrecognized line {word!r}", lineno, path)
    return LocusGraph(tuple(interior), tuple(boundary), tuple(edges))


def parse_locus_text(text, *, path=None):
    return parse_locus_lines(text.splitlines(), path=path)
