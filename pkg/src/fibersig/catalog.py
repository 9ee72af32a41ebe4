"""Catalogs of fiber classes and classification of fiber graphs.

A catalog is the finite list of equivalence classes of singular fibers for
one dimension pair.  Connected classes ship as canonical graphs in a data
file; disconnected classes are disjoint unions of connected ones and are
generated from superscript-token multisets; the (5,4) catalog additionally
contains the suspension of every (4,3) class under the same name.

Classification of an arbitrary fiber graph drops regular circles, splits the
rest into connected components, matches each component against the canonical
graphs by decoration-respecting isomorphism, and reassembles the disjoint-
union name.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from .errors import FibersigError, ParseError, UnknownFiberError, ValidationError
from .graphs import DIM43, DIM54, KINDS, FiberGraph, Vertex, parse_fiber_lines
from .naming import (
    MAX_KAPPA,
    TOKEN_CODIM,
    disconnected_token_multisets,
    make_name,
    sort_tokens,
)

#: The chiral classes for maps out of oriented 4-manifolds: exactly the
#: classes containing a component of type 5, 7 or 8.
CHIRAL_TOKENS_43 = frozenset({"5", "7", "8"})

#: The 17 chiral classes for maps out of oriented 5-manifolds.
CHIRAL_54 = frozenset(
    {
        "III^5",
        "III^7",
        "III^8",
        "IV^{0,5}",
        "IV^{0,7}",
        "IV^{0,8}",
        "IV^{1,5}",
        "IV^{1,7}",
        "IV^{1,8}",
        "IV^10",
        "IV^11",
        "IV^12",
        "IV^13",
        "IV^18",
        "IV^g",
        "IV^h",
        "IV^k",
    }
)


def codimension(fiber: FiberGraph) -> int:
    """Codimension of a fiber: the sum of local codimensions of its
    singular points."""
    fiber.validate()
    return sum(KINDS[v.kind].local_codimension for v in fiber.vertices)


def superscript_tokens(name):
    """Split a class name into its superscript tokens.

    >>> superscript_tokens("II^{0,1}")
    ('0', '1')
    >>> superscript_tokens("III^8")
    ('8',)
    """
    if "^" not in name:
        raise FibersigError(f"class name {name!r} has no superscript")
    sup = name.split("^", 1)[1]
    if sup.startswith("{") and sup.endswith("}"):
        return tuple(sup[1:-1].split(","))
    return (sup,)


@dataclass(frozen=True)
class FiberClass:
    """One catalog entry."""

    name: str
    dimension_pair: tuple
    kappa: int
    connected: bool
    kinds: tuple
    chiral: bool
    tokens: tuple
    graph: FiberGraph

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Catalog:
    """All fiber classes of one dimension pair, plus the regular class."""

    dimension_pair: tuple
    entries: dict
    regular: FiberClass
    _component_index: dict

    def __iter__(self):
        return iter(self.entries.values())

    def __getitem__(self, name):
        return self.entries[name]

    def by_kappa(self, kappa):
        return [c for c in self.entries.values() if c.kappa == kappa]

    def connected_classes(self):
        return [c for c in self.entries.values() if c.connected]

    def disconnected_classes(self):
        return [c for c in self.entries.values() if not c.connected]

    def chiral_classes(self):
        return [c for c in self.entries.values() if c.chiral]


def _parse_catalog_blocks(text, path):
    """Yield (name, kappa, chiral, graph) from a catalog data file."""
    lines = text.splitlines()
    header = None
    block = []
    block_start = 0

    def finish():
        name, kappa, chiral = header
        graph = parse_fiber_lines(block, path=path, start_line=block_start + 1)
        return name, kappa, chiral, graph

    for i, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if stripped.startswith("class "):
            if header is not None:
                yield finish()
            parts = stripped.split()
            if len(parts) != 4:
                raise ParseError("class line: class <name> <kappa> <0|1>", i + 1, path)
            header = (parts[1], int(parts[2]), parts[3] == "1")
            block = []
            block_start = i + 1
        elif header is not None:
            block.append(raw)
        elif stripped:
            raise ParseError(f"unexpected line before first class: {stripped!r}", i + 1, path)
    if header is not None:
        yield finish()


def _load_connected(filename, dimension_pair):
    text = resources.files("fibersig.data").joinpath(filename).read_text()
    classes = []
    for name, kappa, chiral, graph in _parse_catalog_blocks(text, filename):
        graph.validate()
        if graph.dimension_pair != dimension_pair:
            raise ValidationError(f"{name}: wrong dimension pair in {filename}")
        if codimension(graph) != kappa:
            raise ValidationError(
                f"{name}: declared kappa {kappa} does not match the graph"
            )
        if len(graph.components()) != 1:
            raise ValidationError(f"{name}: canonical graph is not connected")
        classes.append(
            FiberClass(
                name=name,
                dimension_pair=dimension_pair,
                kappa=kappa,
                connected=True,
                kinds=graph.kind_multiset(),
                chiral=chiral,
                tokens=superscript_tokens(name),
                graph=graph,
            )
        )
    return classes


def _union_graph(dimension_pair, component_graphs):
    vertices = []
    edges = []
    for i, g in enumerate(component_graphs):
        rename = {v.id: f"{i + 1}.{v.id}" for v in g.vertices}
        relabeled = g.relabeled(rename)
        vertices.extend(relabeled.vertices)
        edges.extend(relabeled.edges)
    return FiberGraph(dimension_pair, tuple(vertices), tuple(edges), 0)


def _regular_class(dimension_pair):
    return FiberClass(
        name="regular",
        dimension_pair=dimension_pair,
        kappa=0,
        connected=False,
        kinds=(),
        chiral=False,
        tokens=(),
        graph=FiberGraph(dimension_pair),
    )


def _disconnected_classes(dimension_pair, by_token, chiral_rule):
    """Build the disjoint-union classes for every legal codimension."""
    out = []
    for kappa in range(2, MAX_KAPPA[dimension_pair] + 1):
        for tokens in disconnected_token_multisets(kappa):
            components = [by_token[t] for t in tokens]
            graph = _union_graph(dimension_pair, [c.graph for c in components])
            name = make_name(tokens, kappa)
            kinds = tuple(sorted(k for c in components for k in c.kinds))
            out.append(
                FiberClass(
                    name=name,
                    dimension_pair=dimension_pair,
                    kappa=kappa,
                    connected=False,
                    kinds=kinds,
                    chiral=chiral_rule(name, tokens),
                    tokens=tokens,
                    graph=graph,
                )
            )
    return out


def _build_catalog(dimension_pair, connected):
    by_token = {}
    for cls in connected:
        if cls.tokens[0] in TOKEN_CODIM:
            by_token[cls.tokens[0]] = cls

    if dimension_pair == DIM43:
        def chiral_rule(name, tokens):
            return bool(set(tokens) & CHIRAL_TOKENS_43)
    else:
        def chiral_rule(name, tokens):
            return name in CHIRAL_54

    for cls in connected:
        expect = chiral_rule(cls.name, cls.tokens)
        if cls.chiral != expect:
            raise ValidationError(
                f"{cls.name}: chirality flag {cls.chiral} contradicts the"
                f" chiral-class list"
            )

    disconnected = _disconnected_classes(dimension_pair, by_token, chiral_rule)
    ordered = sorted(
        list(connected) + disconnected,
        key=lambda c: (c.kappa, not c.connected, _name_sort_key(c)),
    )
    entries = {c.name: c for c in ordered}
    if len(entries) != len(ordered):
        raise ValidationError("duplicate class names in catalog")

    index = {}
    for cls in connected:
        key = cls.graph.canonical_form()
        if key in index:
            raise ValidationError(
                f"canonical graphs of {index[key].name} and {cls.name} collide"
            )
        index[key] = cls
    return Catalog(dimension_pair, entries, _regular_class(dimension_pair), index)


def _name_sort_key(cls):
    from .naming import token_sort_key

    if len(cls.tokens) == 1 and cls.tokens[0] not in TOKEN_CODIM:
        tok = cls.tokens[0]
        if tok.isdigit():
            return ((0, int(tok)),)
        return ((1, tok),)
    return tuple(token_sort_key(t) for t in cls.tokens)


@functools.cache
def catalog_43():
    """The catalog for stable maps of orientable 4-manifolds to 3-manifolds."""
    return _build_catalog(DIM43, _load_connected("catalog_43.txt", DIM43))


@functools.cache
def catalog_54():
    """The catalog for stable maps of orientable 5-manifolds to 4-manifolds.

    Contains the suspension of every (4,3) class under the same name, the
    disconnected codimension-4 classes, and the connected codimension-4
    classes from the data file.
    """
    connected54 = _load_connected("catalog_54.txt", DIM54)
    suspended = []
    for cls in catalog_43().connected_classes():
        g = cls.graph
        graph = FiberGraph(DIM54, g.vertices, g.edges, g.circles)
        suspended.append(
            FiberClass(
                name=cls.name,
                dimension_pair=DIM54,
                kappa=cls.kappa,
                connected=True,
                kinds=cls.kinds,
                chiral=cls.name in CHIRAL_54,
                tokens=cls.tokens,
                graph=graph,
            )
        )
    return _build_catalog(DIM54, suspended + connected54)


def catalog_for(dimension_pair):
    if dimension_pair == DIM43:
        return catalog_43()
    if dimension_pair == DIM54:
        return catalog_54()
    raise FibersigError(f"unsupported dimension pair {dimension_pair}")


def classify(fiber: FiberGraph, catalog: Catalog) -> FiberClass:
    """Classify a fiber graph against a catalog.

    Regular circles are discarded first (classification is modulo regular
    fibers); a fiber with no singular points is the distinguished regular
    class.  Raises UnknownFiberError when a connected component matches no
    canonical graph, or when a disjoint union has no catalog name (its total
    codimension would exceed the target dimension).
    """
    fiber.validate()
    if fiber.dimension_pair != catalog.dimension_pair:
        raise ValidationError(
            f"fiber has dimension pair {fiber.dimension_pair},"
            f" catalog is for {catalog.dimension_pair}"
        )
    components = fiber.drop_circles().components()
    if not components:
        return catalog.regular
    matched = []
    for comp in components:
        key = comp.canonical_form()
        cls = catalog._component_index.get(key)
        if cls is None:
            raise UnknownFiberError(
                "connected singular component matches no catalog graph:"
                f" kinds {comp.kind_multiset()}",
                canonical_form=key,
            )
        matched.append(cls)
    if len(matched) == 1:
        return matched[0]
    kappa = sum(c.kappa for c in matched)
    tokens = [c.tokens[0] for c in matched]
    if kappa > MAX_KAPPA[catalog.dimension_pair] or any(
        t not in TOKEN_CODIM for t in tokens
    ):
        raise UnknownFiberError(
            f"disjoint union of {[c.name for c in matched]} has codimension"
            f" {kappa}, beyond the catalog for {catalog.dimension_pair}"
        )
    name = make_name(sort_tokens(tokens), kappa)
    try:
        return catalog.entries[name]
    except KeyError:
        raise UnknownFiberError(f"no catalog class named {name}")


def suspend(cls: FiberClass) -> FiberClass:
    """The (5,4) class of the same name as a (4,3) class.

    Suspension crosses source and target with a line, so it preserves the
    name, the codimension and the singular-point kinds.
    """
    if cls.dimension_pair != DIM43:
        raise FibersigError(
            f"suspension takes a (4,3) class, got {cls.dimension_pair}"
        )
    if cls.kappa == 0:
        return catalog_54().regular
    return catalog_54().entries[cls.name]
