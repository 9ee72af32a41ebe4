"""Signature bookkeeping for stable maps of closed oriented 4-manifolds.

Two independent routes to the signature are implemented.  The first uses the
self-intersection identity for fold-only maps: three times the signature
equals the self-intersection number of the surface of definite fold points.
That number is computed sphere by sphere from a normal section built out of
the indefinite fold locus; the section is defined away from ten disk regions
(six rectangular, four hexagonal) and contributes one winding degree per
region.  The second route counts isolated triple-fold (III^8) fibers with
their signs.  For the bundled worked example both routes give +1.

Two section models occur.  Over a sphere whose nearby fibers stay connected
the section picks an antipodal *pair* of points on each circle fiber, so
region degrees are recorded in half-turns and the self-intersection number
is half the degree sum.  Over a sphere whose nearby fibers split in two the
section picks a single point, degrees are full turns, and the
self-intersection number is the plain degree sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import InconsistencyError, ParseError, ValidationError

MODEL_ANTIPODAL = "antipodal-pair"
MODEL_SINGLE = "single-point"

RECT = "rect"
HEX = "hex"

#: Every sphere decomposes into exactly this many regions of each kind.
REQUIRED_REGIONS = {RECT: 6, HEX: 4}


@dataclass(frozen=True)
class RegionDecomposition:
    """Per-region boundary degrees of the normal section over one sphere.

    ``regions`` holds (kind, degree) pairs; in the antipodal-pair model the
    degree is in half-turns, in the single-point model in full turns.
    """

    sphere_id: str
    model: str
    regions: tuple

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(tuple(r) for r in self.regions))

    def problems(self):
        out = []
        if self.model not in (MODEL_ANTIPODAL, MODEL_SINGLE):
            out.append(f"{self.sphere_id}: unknown section model {self.model!r}")
        counts = {RECT: 0, HEX: 0}
        for kind, degree in self.regions:
            if kind not in counts:
                out.append(f"{self.sphere_id}: unknown region kind {kind!r}")
                continue
            counts[kind] += 1
            if not isinstance(degree, int):
                out.append(f"{self.sphere_id}: degree {degree!r} is not an integer")
        for kind, want in REQUIRED_REGIONS.items():
            if counts[kind] != want:
                out.append(
                    f"{self.sphere_id}: {counts[kind]} {kind} regions,"
                    f" requires exactly {want}"
                )
        return out

    def validate(self):
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self

    def degree_sum(self):
        return sum(degree for _, degree in self.regions)


def sphere_self_intersection(decomposition: RegionDecomposition) -> int:
    """Self-intersection number of one definite-fold sphere."""
    decomposition.validate()
    total = decomposition.degree_sum()
    if decomposition.model == MODEL_ANTIPODAL:
        if total % 2 != 0:
            raise InconsistencyError(
                f"{decomposition.sphere_id}: degree sum {total} in the"
                " antipodal-pair model must be even (it is twice the"
                " self-intersection number)"
            )
        return total // 2
    return total


def definite_locus_self_intersection(decompositions) -> int:
    """Self-intersection of the whole definite fold locus: the sum over its
    spheres."""
    seen = set()
    for d in decompositions:
        if d.sphere_id in seen:
            raise ValidationError(f"sphere {d.sphere_id} listed twice")
        seen.add(d.sphere_id)
    return sum(sphere_self_intersection(d) for d in decompositions)


def signature_from_definite_locus(self_intersection: int) -> int:
    """Signature from the identity: 3 * signature = definite-locus
    self-intersection."""
    if self_intersection % 3 != 0:
        raise InconsistencyError(
            f"self-intersection {self_intersection} is not divisible by 3;"
            " the triple self-intersection identity cannot hold"
        )
    return self_intersection // 3


def signature_from_fibers(signs) -> int:
    """Signature as the signed count of isolated triple-fold fibers."""
    signs = list(signs)
    bad = [s for s in signs if s not in (1, -1)]
    if bad:
        raise ValidationError(f"fiber signs must be +1 or -1, got {bad}")
    return sum(signs)


@dataclass(frozen=True)
class StableMapSummary:
    """Signed fiber list and optional intersection/Euler data of one map."""

    fiber_signs: tuple
    definite_self_intersection: int | None = None
    total_self_intersection: int | None = None
    euler_characteristic: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "fiber_signs", tuple(self.fiber_signs))


@dataclass(frozen=True)
class ConsistencyCheck:
    name: str
    passed: bool
    detail: str


def consistency_checks(summary: StableMapSummary):
    """Run every applicable identity on a summary; report-only."""
    sigma = signature_from_fibers(summary.fiber_signs)
    checks = []

    if summary.definite_self_intersection is not None:
        s = summary.definite_self_intersection
        ok = s % 3 == 0 and s // 3 == sigma
        checks.append(
            ConsistencyCheck(
                "signature-vs-definite-locus",
                ok,
                f"signed fiber count {sigma} vs definite-locus"
                f" self-intersection {s} (wants 3*{sigma} = {s})",
            )
        )
    if summary.total_self_intersection is not None:
        ss = summary.total_self_intersection
        checks.append(
            ConsistencyCheck(
                "total-self-intersection",
                ss == 3 * sigma,
                f"S.S = {ss} vs 3*sigma = {3 * sigma}",
            )
        )
        checks.append(
            ConsistencyCheck(
                "total-self-intersection-mod-4",
                (ss - 3 * sigma) % 4 == 0,
                f"S.S = {ss} and 3*sigma = {3 * sigma} agree mod 4",
            )
        )
    if summary.euler_characteristic is not None:
        chi = summary.euler_characteristic
        checks.append(
            ConsistencyCheck(
                "euler-parity",
                (sigma - chi) % 2 == 0,
                f"sigma = {sigma} and chi = {chi} have the same parity",
            )
        )
    bound = abs(sigma)
    checks.append(
        ConsistencyCheck(
            "fiber-count-bound",
            len(summary.fiber_signs) >= bound,
            f"{len(summary.fiber_signs)} triple-fold fibers,"
            f" at least {bound} required",
        )
    )
    return checks


# -- bundled worked example ----------------------------------------------------


def load_example():
    text = resources.files("fibersig.data").joinpath("example_map.txt").read_text()
    return parse_summary_text(text, path="example_map.txt", with_spheres=True)


def parse_summary_text(text, *, path=None, with_spheres=False):
    """Parse a summary file.

    Recognized lines: ``sphere <id>`` opening a sphere block with ``model``,
    ``rect <degree> x6`` and ``hex <degree> x4`` lines; ``fibers <signs...>``;
    ``s0s0 <int>``; ``ss <int>``; ``chi <int>``.  Returns (summary, spheres).
    """
    spheres = []
    current = None
    fiber_signs = []
    saw_fibers = False
    s0s0 = ss = chi = None

    def close():
        nonlocal current
        if current is not None:
            spheres.append(
                RegionDecomposition(current["id"], current["model"], tuple(current["regions"]))
            )
            current = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        word = parts[0]
        if word == "sphere":
            close()
            if len(parts) != 2:
                raise ParseError("sphere line: sphere <id>", lineno, path)
            current = {"id": parts[1], "model": None, "regions": []}
        elif word == "model":
            if current is None:
                raise ParseError("model line outside a sphere block", lineno, path)
            if len(parts) != 2:
                raise ParseError("model line: model <name>", lineno, path)
            current["model"] = parts[1]
        elif word in (RECT, HEX):
            if current is None:
                raise ParseError(f"{word} line outside a sphere block", lineno, path)
            if len(parts) != 3 or not parts[2].startswith("x"):
                raise ParseError(f"region line: {word} <degree> x<count>", lineno, path)
            try:
                degree = int(parts[1])
                count = int(parts[2][1:])
            except ValueError:
                raise ParseError("region degree and count must be integers", lineno, path)
            current["regions"].extend([(word, degree)] * count)
        elif word == "fibers":
            saw_fibers = True
            try:
                fiber_signs.extend(int(p) for p in parts[1:])
            except ValueError:
                raise ParseError("fiber signs must be +1 or -1", lineno, path)
        elif word in ("s0s0", "ss", "chi"):
            if len(parts) != 2:
                raise ParseError(f"{word} line: {word} <int>", lineno, path)
            try:
                value = int(parts[1])
            except ValueError:
                raise ParseError(f"{word} value must be an integer", lineno, path)
            if word == "s0s0":
                s0s0 = value
            elif word == "ss":
                ss = value
            else:
                chi = value
        else:
            raise ParseError(f"unrecognized line {word!r}", lineno, path)
    close()
    if with_spheres and not spheres:
        raise ParseError("expected sphere blocks", None, path)
    if not saw_fibers:
        raise ParseError("missing fibers line", None, path)
    summary = StableMapSummary(
        fiber_signs=tuple(fiber_signs),
        definite_self_intersection=s0s0,
        total_self_intersection=ss,
        euler_characteristic=chi,
    )
    return summary, spheres


def example_report():
    """The full ledger of the bundled worked example, as printable lines.

    Runs both signature routes and reports whether they agree; the final
    line ends in MATCH exactly when they do.
    """
    summary, spheres = load_example()
    lines = ["worked example: fold-only stable map with one triple-fold fiber"]
    pieces = []
    for sphere in spheres:
        self_int = sphere_self_intersection(sphere)
        pieces.append(self_int)
        rect_deg = next(d for k, d in sphere.regions if k == RECT)
        hex_deg = next(d for k, d in sphere.regions if k == HEX)
        lines.append(
            f"sphere {sphere.sphere_id}: model {sphere.model},"
            f" rect degrees {rect_deg:+d} x6, hex degrees {hex_deg:+d} x4,"
            f" degree sum {sphere.degree_sum()}, self-intersection {self_int}"
        )
    total = definite_locus_self_intersection(spheres)
    lines.append(
        "definite fold locus self-intersection: "
        + " + ".join(f"({p})" for p in pieces)
        + f" = {total}"
    )
    sigma_locus = signature_from_definite_locus(total)
    lines.append(
        f"signature from triple self-intersection identity: {total} / 3 = {sigma_locus}"
    )
    sigma_fibers = signature_from_fibers(summary.fiber_signs)
    lines.append(f"signed III^8 fiber count: {sigma_fibers:+d}")
    verdict = "MATCH" if sigma_locus == sigma_fibers else "MISMATCH"
    lines.append(
        f"sigma = {sigma_locus:+d}; signed III^8 count = {sigma_fibers:+d}; {verdict}"
    )
    return lines, sigma_locus == sigma_fibers
