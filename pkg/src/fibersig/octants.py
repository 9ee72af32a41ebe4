"""Local triple-point model and the sign of a III^8 fiber.

At an isolated fiber with three indefinite fold points, the three sheets of
the singular-value surface meet in general position and cut a neighborhood
of the target point into eight octants.  The regular fiber over an octant
has one or two components, and adjacent octants always differ, so the two
labels sit in checkerboard position.  In the standard model the sheets are
the three coordinate planes, octants are sign vectors in {-1,+1}^3, and the
normal vector of sheet i pointing into octant w is w_i * e_i.

The sign of the fiber compares the frame of the three inward normals,
ordered by the cyclic order that the fiber orientation induces on the three
singular points, against the right-handed orientation.  It does not depend
on which 1-octant is chosen, and it reverses when the cyclic order is
reversed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ValidationError

#: The eight octants of the standard model.
OCTANTS = tuple(itertools.product((-1, 1), repeat=3))

POINTS = ("q1", "q2", "q3")


def _adjacent_pairs():
    pairs = []
    for w in OCTANTS:
        for axis in range(3):
            flipped = list(w)
            flipped[axis] = -flipped[axis]
            pair = (w, tuple(flipped))
            if pair[0] < pair[1]:
                pairs.append(pair)
    return tuple(pairs)


#: The 12 unordered pairs of octants differing in exactly one coordinate.
ADJACENT_PAIRS = _adjacent_pairs()


def octant_violations(labels):
    """List every adjacent octant pair carrying equal labels."""
    problems = []
    missing = [w for w in OCTANTS if w not in labels]
    if missing:
        problems.append(f"labeling misses octants {sorted(missing)}")
        return problems
    bad_values = sorted({labels[w] for w in OCTANTS} - {1, 2})
    if bad_values:
        problems.append(f"labels must be 1 or 2, got {bad_values}")
        return problems
    for a, b in ADJACENT_PAIRS:
        if labels[a] == labels[b]:
            problems.append(
                f"adjacent octants {a} and {b} share the label {labels[a]}"
            )
    return problems


def validate_octants(labels):
    """Raise unless every adjacent octant pair alternates labels."""
    problems = octant_violations(labels)
    if problems:
        raise ValidationError(problems)


def parity_labeling(parity):
    """The labeling whose 1-octants are the octants of the given parity."""
    if parity not in (1, -1):
        raise ValidationError(f"parity must be +1 or -1, got {parity}")
    return {w: (1 if w[0] * w[1] * w[2] == parity else 2) for w in OCTANTS}


@dataclass(frozen=True)
class TriplePointModel:
    """Octant labels, sheet assignment and cyclic order at a triple point.

    ``sheet_of_point`` sends each singular point to the sheet (1..3) that is
    the image of its fold disk; ``cyclic_order`` is the sequence of the three
    points induced by the fiber orientation, up to rotation.
    """

    labels: dict
    sheet_of_point: dict = field(
        default_factory=lambda: {"q1": 1, "q2": 2, "q3": 3}
    )
    cyclic_order: tuple = POINTS

    def validate(self):
        problems = octant_violations(self.labels)
        if sorted(self.sheet_of_point) != sorted(POINTS) or sorted(
            self.sheet_of_point.values()
        ) != [1, 2, 3]:
            problems.append(
                "sheet_of_point must be a bijection {q1,q2,q3} -> {1,2,3}"
            )
        if sorted(self.cyclic_order) != sorted(POINTS):
            problems.append("cyclic_order must arrange q1, q2, q3")
        if problems:
            raise ValidationError(problems)
        return self


def one_octants(model_or_labels):
    """The four octants whose regular fiber is connected."""
    labels = getattr(model_or_labels, "labels", model_or_labels)
    if isinstance(model_or_labels, TriplePointModel):
        model_or_labels.validate()
    else:
        validate_octants(labels)
    return frozenset(w for w in OCTANTS if labels[w] == 1)


def _det3(columns):
    (a, d, g), (b, e, h), (c, f, i) = columns
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _sign_from(model, octant):
    columns = []
    for q in model.cyclic_order:
        sheet = model.sheet_of_point[q]
        w = [0, 0, 0]
        w[sheet - 1] = octant[sheet - 1]
        columns.append(tuple(w))
    det = _det3(columns)
    return 1 if det > 0 else -1


def iii8_sign(model: TriplePointModel) -> int:
    """Sign (+1 or -1) of the fiber described by a triple-point model.

    Picks a 1-octant, takes the inward normal of each sheet, orders the
    normals by the cyclic order of the singular points, and returns the
    orientation of that frame.  The result is checked to agree over all four
    1-octants.
    """
    model.validate()
    signs = {_sign_from(model, w) for w in one_octants(model)}
    if len(signs) != 1:
        raise ValidationError(
            "sign differs between 1-octants; labeling is inconsistent"
        )
    return signs.pop()


def is_chiral(cls) -> bool:
    """Whether a catalog class admits no orientation-reversing symmetry."""
    return cls.chiral


def parse_octant_lines(lines, *, path=None):
    """Parse eight ``<w1> <w2> <w3> <label>`` lines into a labeling."""
    from .errors import ParseError

    labels = {}
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 4:
            raise ParseError("octant line: <w1> <w2> <w3> <1|2>", lineno, path)
        try:
            w = tuple(int(p) for p in parts[:3])
            value = int(parts[3])
        except ValueError:
            raise ParseError("octant line entries must be integers", lineno, path)
        if w not in OCTANTS:
            raise ParseError(f"octant coordinates must be +-1, got {w}", lineno, path)
        if w in labels:
            raise ParseError(f"octant {w} listed twice", lineno, path)
        labels[w] = value
    if len(labels) != 8:
        raise ParseError(f"expected 8 octant lines, got {len(labels)}", None, path)
    return labels
