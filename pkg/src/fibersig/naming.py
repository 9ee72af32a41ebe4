"""Names of fiber classes and enumeration of disjoint-union classes.

Connected fiber classes carry a one-token superscript (a digit or a letter);
a disconnected class is named by the multiset of its components' tokens.  The
Roman-numeral prefix records the codimension, and the number of tokens in the
superscript equals the number of connected components containing singular
points.
"""

from __future__ import annotations

from .errors import FibersigError
from .graphs import DIM43, DIM54

#: Local codimension of the connected class behind each superscript token.
TOKEN_CODIM = {
    "0": 1,
    "1": 1,
    "2": 2,
    "3": 2,
    "a": 2,
    "4": 3,
    "5": 3,
    "6": 3,
    "7": 3,
    "8": 3,
    "b": 3,
    "c": 3,
    "d": 3,
    "e": 3,
}

_PREFIX = {1: "I", 2: "II", 3: "III", 4: "IV"}

#: Highest codimension of a fiber class per dimension pair (the codimension
#: of a fiber locus cannot exceed the target dimension).
MAX_KAPPA = {DIM43: 3, DIM54: 4}


def token_sort_key(token):
    """Digits ascending before letters alphabetic."""
    if token.isdigit():
        return (0, int(token))
    return (1, token)


def sort_tokens(tokens):
    return tuple(sorted(tokens, key=token_sort_key))


def make_name(tokens, kappa):
    """Assemble a class name from a superscript multiset and codimension.

    >>> make_name(["1", "0"], 2)
    'II^{0,1}'
    >>> make_name(["8"], 3)
    'III^8'
    """
    if kappa not in _PREFIX:
        raise FibersigError(f"codimension {kappa} out of range 1..4")
    tokens = list(tokens)
    if not tokens:
        raise FibersigError("superscript needs at least one token")
    for t in tokens:
        if t not in TOKEN_CODIM:
            raise FibersigError(f"unknown superscript token {t!r}")
    ordered = sort_tokens(tokens)
    prefix = _PREFIX[kappa]
    if len(ordered) == 1:
        return f"{prefix}^{ordered[0]}"
    return f"{prefix}^{{{','.join(ordered)}}}"


def _multisets(tokens, total, smallest_index, size):
    """All non-increasing-index token multisets of given codimension total."""
    if total == 0:
        if size >= 2:
            yield ()
        return
    for i in range(smallest_index, len(tokens)):
        t = tokens[i]
        c = TOKEN_CODIM[t]
        if c > total:
            continue
        if c == total and size + 1 < 2:
            continue
        for rest in _multisets(tokens, total - c, i, size + 1):
            yield (t,) + rest


def disconnected_token_multisets(kappa):
    """Token multisets (each of size >= 2) whose codimensions sum to kappa,
    in lexicographic order of the sorted token sequence."""
    ordered = sorted(TOKEN_CODIM, key=token_sort_key)
    found = set()
    for combo in _multisets(ordered, kappa, 0, 0):
        found.add(sort_tokens(combo))
    return sorted(found, key=lambda seq: tuple(token_sort_key(t) for t in seq))


def enumerate_disconnected(dimension_pair, kappa):
    """Names of all disconnected classes of the given codimension.

    Components range over the connected classes of codimension < kappa;
    output is sorted lexicographically by token sequence (digits before
    letters).
    """
    if dimension_pair not in MAX_KAPPA:
        raise FibersigError(f"unsupported dimension pair {dimension_pair}")
    if not 2 <= kappa <= MAX_KAPPA[dimension_pair]:
        raise FibersigError(
            f"codimension {kappa} outside the supported range"
            f" 2..{MAX_KAPPA[dimension_pair]} for {dimension_pair}"
        )
    return [make_name(seq, kappa) for seq in disconnected_token_multisets(kappa)]
