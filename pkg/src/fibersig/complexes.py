"""The cochain complex of chiral fiber classes and its third cohomology.

For maps of oriented 5-manifolds to 4-manifolds there are three chiral
classes of codimension 3 and fourteen of codimension 4; all other chiral
groups vanish.  The coboundary sends a codimension-3 generator G to the sum
over codimension-4 generators F of the incidence coefficient [G:F] (signed
count of arcs of the G-locus entering minus leaving a point of the F-locus).
Only part of the incidence table is pinned down structurally:

* the III^8 row vanishes identically (III^8 is a cocycle: the arcs of its
  locus pass through the relevant codimension-4 points one-in one-out);
* [III^5:IV^11] and [III^7:IV^10] are nonzero while [III^5:IV^10] and
  [III^7:IV^11] vanish.

Any table satisfying those constraints yields a third cohomology group that
is infinite cyclic, generated by III^8; the remaining entries are data.  All
linear algebra here is exact over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParseError, ValidationError

#: Codimension-3 chiral classes (row order of the incidence table).
C3_BASIS = ("III^5", "III^7", "III^8")

#: Codimension-4 chiral classes (column order of the incidence table).
C4_BASIS = (
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
)

_COL = {name: j for j, name in enumerate(C4_BASIS)}
_ROW = {name: i for i, name in enumerate(C3_BASIS)}


@dataclass(frozen=True)
class IncidenceTable:
    """Incidence coefficients [G:F], rows over C3_BASIS, columns C4_BASIS."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != 3 or any(len(r) != 14 for r in rows):
            raise ValidationError("incidence table must be 3 x 14")
        object.__setattr__(self, "rows", rows)

    def entry(self, row_name, col_name):
        return self.rows[_ROW[row_name]][_COL[col_name]]

    def problems(self):
        out = []
        if any(x != 0 for x in self.rows[_ROW["III^8"]]):
            out.append(
                "III^8 row must vanish: every incidence coefficient of a"
                " III^8 locus arc is zero (one arc in, one arc out)"
            )
        if self.entry("III^5", "IV^11") == 0:
            out.append("[III^5:IV^11] must be nonzero")
        if self.entry("III^5", "IV^10") != 0:
            out.append("[III^5:IV^10] must vanish")
        if self.entry("III^7", "IV^11") != 0:
            out.append("[III^7:IV^11] must vanish")
        if self.entry("III^7", "IV^10") == 0:
            out.append("[III^7:IV^10] must be nonzero")
        return out

    def validate(self):
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self


#: Minimal table satisfying every structural constraint.
DEFAULT_TABLE = IncidenceTable(
    rows=tuple(
        tuple(
            1
            if (row, col) in (("III^5", "IV^11"), ("III^7", "IV^10"))
            else 0
            for col in C4_BASIS
        )
        for row in C3_BASIS
    )
)


@dataclass(frozen=True)
class ChiralComplex:
    """Free integer modules C^3 (rank 3) and C^4 (rank 14) with the
    coboundary matrix delta3 (14 x 3, one column per C^3 generator); all
    other degrees vanish."""

    c3_basis: tuple
    c4_basis: tuple
    delta3: tuple

    @property
    def rank_c3(self):
        return len(self.c3_basis)

    @property
    def rank_c4(self):
        return len(self.c4_basis)


def build_complex(table: IncidenceTable, validate: bool = True) -> ChiralComplex:
    """Assemble the complex; with ``validate`` the structural constraints on
    the table are enforced first."""
    if validate:
        table.validate()
    delta3 = tuple(
        tuple(table.rows[j][i] for j in range(3)) for i in range(14)
    )
    return ChiralComplex(C3_BASIS, C4_BASIS, delta3)


# -- exact integer linear algebra -------------------------------------------


def _row_echelon_with_transform(matrix):
    """Integer row echelon of ``matrix`` via unimodular row operations,
    tracking the transform.  Returns (echelon rows, transform rows, rank)."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    transform = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        while True:
            nonzero = [i for i in range(r, n) if rows[i][c] != 0]
            if not nonzero:
                break
            pivot = min(nonzero, key=lambda i: abs(rows[i][c]))
            done = True
            for i in nonzero:
                if i == pivot:
                    continue
                q = rows[i][c] // rows[pivot][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot])]
                transform[i] = [
                    a - q * b for a, b in zip(transform[i], transform[pivot])
                ]
                if rows[i][c] != 0:
                    done = False
            if done:
                rows[r], rows[pivot] = rows[pivot], rows[r]
                transform[r], transform[pivot] = transform[pivot], transform[r]
                r += 1
                break
    return rows, transform, r


def _hermite_normalize(rows):
    """Row-style Hermite normal form of a full-rank list of rows: positive
    pivots, entries above each pivot reduced into [0, pivot)."""
    rows = [list(r) for r in rows]
    pivots = []
    for i, row in enumerate(rows):
        col = next(j for j, x in enumerate(row) if x != 0)
        if row[col] < 0:
            rows[i] = [-x for x in row]
        pivots.append(col)
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    rows = [rows[i] for i in order]
    pivots = [pivots[i] for i in order]
    for i in range(len(rows)):
        for k in range(i):
            p = pivots[i]
            q = rows[k][p] // rows[i][p]
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[i])]
    return [tuple(r) for r in rows]


def integer_kernel(matrix):
    """Basis of the integer kernel lattice {v : M v = 0}.

    Works over exact integers; the basis is returned in a deterministic
    normal form (row-style Hermite form of the stacked basis vectors).
    """
    if not matrix:
        return []
    m = len(matrix)
    n = len(matrix[0])
    transposed = [[matrix[i][j] for i in range(m)] for j in range(n)]
    echelon, transform, rank = _row_echelon_with_transform(transposed)
    kernel = [transform[i] for i in range(rank, n)]
    for v in kernel:
        assert all(
            sum(matrix[i][j] * v[j] for j in range(n)) == 0 for i in range(m)
        )
    if not kernel:
        return []
    # Re-echelonize so pivot columns are distinct, then Hermite-normalize.
    reduced, _, krank = _row_echelon_with_transform(kernel)
    return _hermite_normalize(reduced[:krank])


def smith_diagonal(matrix):
    """Diagonal entries of the Smith normal form (nonnegative, each dividing
    the next)."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return []
    n, m = len(rows), len(rows[0])

    def pick_pivot(t):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if rows[i][j] != 0 and (
                    best is None or abs(rows[i][j]) < abs(rows[best[0]][best[1]])
                ):
                    best = (i, j)
        return best

    diag = []
    for t in range(min(n, m)):
        while True:
            pos = pick_pivot(t)
            if pos is None:
                break
            i0, j0 = pos
            rows[t], rows[i0] = rows[i0], rows[t]
            for row in rows:
                row[t], row[j0] = row[j0], row[t]
            dirty = False
            for i in range(t + 1, n):
                q = rows[i][t] // rows[t][t]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[t])]
                if rows[i][t] != 0:
                    dirty = True
            for j in range(t + 1, m):
                q = rows[t][j] // rows[t][t]
                if q:
                    for row in rows:
                        row[j] -= q * row[t]
                if rows[t][j] != 0:
                    dirty = True
            if not dirty:
                break
        if rows[t][t] == 0:
            break
        diag.append(abs(rows[t][t]))
    # enforce the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = math.gcd(diag[i], diag[j])
            lcm = diag[i] * diag[j] // g if g else 0
            diag[i], diag[j] = g, lcm
    return diag


@dataclass(frozen=True)
class CohomologyDescription:
    """Rank and named generators of a cohomology group."""

    degree: int
    rank: int
    generators: tuple  # tuples of (coefficient, generator-name), one per basis vector
    torsion: tuple = ()

    def generator_strings(self):
        out = []
        for vec in self.generators:
            terms = []
            for coefficient, name in vec:
                if coefficient == 0:
                    continue
                magnitude = name if abs(coefficient) == 1 else f"{abs(coefficient)}*{name}"
                if not terms:
                    terms.append(magnitude if coefficient > 0 else f"-{magnitude}")
                else:
                    terms.append(f"{'+' if coefficient > 0 else '-'} {magnitude}")
            out.append(" ".join(terms) if terms else "0")
        return tuple(out)


def h3(complex_: ChiralComplex) -> CohomologyDescription:
    """Third cohomology: the kernel of delta3, since nothing maps into C^3."""
    basis = integer_kernel([list(r) for r in complex_.delta3])
    generators = tuple(
        tuple(zip(vec, complex_.c3_basis)) for vec in basis
    )
    return CohomologyDescription(degree=3, rank=len(basis), generators=generators)


def h4(complex_: ChiralComplex) -> CohomologyDescription:
    """Fourth cohomology: the cokernel of delta3.  Depends on the unpinned
    table entries, so treat it as descriptive only."""
    diag = smith_diagonal([list(r) for r in complex_.delta3])
    positive = [d for d in diag if d != 0]
    rank = len(complex_.c4_basis) - len(positive)
    torsion = tuple(d for d in positive if d > 1)
    return CohomologyDescription(degree=4, rank=rank, generators=(), torsion=torsion)


# -- table file format -------------------------------------------------------


def parse_incidence_lines(lines, *, path=None):
    """Parse an incidence table: a header of 14 column names followed by one
    row line per codimension-3 class (``<row-name> <14 integers>``)."""
    header = None
    rows = {}
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if header is None:
            if sorted(parts) != sorted(C4_BASIS):
                raise ParseError(
                    "header must list the 14 codimension-4 chiral class names",
                    lineno,
                    path,
                )
            header = parts
            continue
        name = parts[0]
        if name not in C3_BASIS:
            raise ParseError(f"unknown row class {name!r}", lineno, path)
        if name in rows:
            raise ParseError(f"row {name} listed twice", lineno, path)
        if len(parts) != 15:
            raise ParseError("row needs a name and 14 integers", lineno, path)
        try:
            values = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError("row entries must be integers", lineno, path)
        by_col = dict(zip(header, values))
        rows[name] = [by_col[c] for c in C4_BASIS]
    if header is None:
        raise ParseError("missing header row", None, path)
    missing = [n for n in C3_BASIS if n not in rows]
    if missing:
        raise ParseError(f"missing rows for {missing}", None, path)
    return IncidenceTable(rows=tuple(tuple(rows[n]) for n in C3_BASIS))


def parse_incidence_text(text, *, path=None):
    return parse_incidence_lines(text.splitlines(), path=path)


def format_incidence_table(table: IncidenceTable) -> str:
    lines = [" ".join(C4_BASIS)]
    for name, row in zip(C3_BASIS, table.rows):
        lines.append(name + " " + " ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
