"""Finite echelon models of discrete-cocompact subspaces of k((u))^r relative to k[[u]]^r.

A WindowedSubspace spans finitely many echelon rows inside a u-window
[u_lo, u_hi) and, when full_below is set, additionally contains every vector
supported strictly below the window.  That full below-window tail is the only
infinite mechanism in the model; it is what makes the quotient by k[[u]]^r
linearly compact and the index finite.

Rows are vectors of Laurent polynomials.  The ambient basis is indexed by
(exponent, component) in exponent-major order, so a row's pivot is its lowest
u-order term and the pivot profile is the gap sequence of the subspace.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from . import _linalg
from .errors import (NotCocompactError, SupportViolationError,
                     WindowMismatchError, WindowTooSmallError)
from .series import Field, LaurentPoly


class Verdict(enum.Enum):
    IN = "in"
    NOT_IN = "not-in"
    INCONCLUSIVE = "inconclusive"


def _vector_to_row(vec: Sequence[LaurentPoly]) -> dict:
    row = {}
    for c, poly in enumerate(vec):
        for e, coeff in poly.coeffs:
            row[(e, c)] = coeff
    return row


def _row_to_vector(row: dict, r: int, field: Field) -> tuple:
    polys = []
    for c in range(r):
        polys.append(LaurentPoly.from_dict(
            field, {e: coeff for (e, cc), coeff in row.items() if cc == c}))
    return tuple(polys)


@dataclass(frozen=True)
class WindowedSubspace:
    """Echelonized window model; rows stored canonically sorted by pivot."""

    field: Field
    r: int
    u_lo: int
    u_hi: int
    full_below: bool
    rows: tuple = ()  # each row: tuple(((e, c), Scalar), ...) sorted by (e, c)

    def row_dicts(self) -> list:
        return [dict(row) for row in self.rows]

    def row_vectors(self) -> list:
        return [_row_to_vector(dict(row), self.r, self.field) for row in self.rows]

    def dim_rows(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "u_lo": self.u_lo,
            "u_hi": self.u_hi,
            "full_below": self.full_below,
            "rows": [[p.to_json() for p in vec] for vec in self.row_vectors()],
        }

    @staticmethod
    def from_json(obj: dict, field: Field) -> "WindowedSubspace":
        rows = [tuple(LaurentPoly.from_json(p) for p in vec) for vec in obj["rows"]]
        return echelonize(rows, obj["r"], obj["u_lo"], obj["u_hi"], obj["full_below"],
                          field=field)


def echelonize(rows: Sequence[Sequence[LaurentPoly]], r: int, u_lo: int, u_hi: int,
               full_below: bool, field: Union[Field, None] = None) -> WindowedSubspace:
    """Reduced echelon form of the span of the given vectors inside the window.

    With full_below set, terms below u_lo are absorbable into the modeled tail
    and are discarded before elimination.  Support at or above u_hi is an error.
    """
    dict_rows = []
    for vec in rows:
        if len(vec) != r:
            raise SupportViolationError(f"vector has {len(vec)} components, expected {r}")
        if field is None:
            field = vec[0].field
        row = _vector_to_row(vec)
        kept = {}
        for (e, c), coeff in row.items():
            if e >= u_hi:
                raise SupportViolationError(f"exponent {e} at or above window top {u_hi}")
            if e < u_lo:
                if not full_below:
                    raise SupportViolationError(f"exponent {e} below window bottom {u_lo}")
                continue  # absorbed by the full below-window tail
            kept[(e, c)] = coeff
        dict_rows.append(kept)
    if field is None:
        raise SupportViolationError("cannot infer the field of an empty subspace; pass field=")
    basis = _linalg.echelon(dict_rows)
    canon = tuple(tuple(sorted(row.items())) for row in basis)
    return WindowedSubspace(field, r, u_lo, u_hi, full_below, canon)


def membership(W: WindowedSubspace, vec: Sequence[LaurentPoly]) -> Verdict:
    """In iff the vector reduces to zero against the rows.

    The vector's support must lie inside the window; terms below u_lo count as
    zero only through the full_below tail of the rows themselves, a vector
    poking outside is rejected.
    """
    if len(vec) != W.r:
        raise SupportViolationError(f"vector has {len(vec)} components, expected {W.r}")
    row = _vector_to_row(vec)
    for (e, _c) in row:
        if not (W.u_lo <= e < W.u_hi):
            raise SupportViolationError(f"exponent {e} outside window [{W.u_lo}, {W.u_hi})")
    rem = _linalg.reduce_vector(row, W.row_dicts())
    return Verdict.IN if not rem else Verdict.NOT_IN


def pivot_profile(W: WindowedSubspace) -> frozenset:
    """Set of (component, exponent) pivot pairs, components numbered from 1."""
    return frozenset((c + 1, e) for (e, c) in _linalg.pivot_keys(W.row_dicts()))


def fredholm_index(W: WindowedSubspace, top_margin: int = 0) -> int:
    """Index of the modeled subspace against k[[u]]^r.

    Equals dim(RowSpan ∩ F+) - dim(F- / proj(RowSpan)) with F+ the window span
    of exponents >= 0 and F- the span of exponents < 0; for faithfully windowed
    inputs this is the index of W -> k((u))^r / k[[u]]^r.
    """
    if not W.full_below:
        raise NotCocompactError(
            "subspace without a full below-window tail has a non-compact quotient")
    if not (W.u_lo <= 0 < W.u_hi):
        raise WindowTooSmallError(
            "index against k[[u]]^r needs the window to straddle exponent 0")
    pivots = _linalg.pivot_keys(W.row_dicts())
    for (e, _c) in pivots:
        if e >= W.u_hi - top_margin:
            raise WindowTooSmallError(
                f"pivot exponent {e} touches the top margin [{W.u_hi - top_margin}, {W.u_hi})")
    # exponent-major reduced echelon: a combination lies in F+ iff every
    # contributing row has pivot exponent >= 0, so both dimensions read off
    # the pivot profile.
    nonneg = sum(1 for (e, _c) in pivots if e >= 0)
    neg = len(pivots) - nonneg
    neg_window = W.r * max(0, min(0, W.u_hi) - W.u_lo)
    return nonneg - (neg_window - neg)


def direct_sum(W1: WindowedSubspace, W2: WindowedSubspace) -> WindowedSubspace:
    """Block-diagonal sum; ranks add, windows must agree."""
    if (W1.u_lo, W1.u_hi) != (W2.u_lo, W2.u_hi):
        raise WindowMismatchError("direct sum needs identical u-windows")
    if W1.field != W2.field:
        raise WindowMismatchError("direct sum needs a common field")
    zero1 = tuple(LaurentPoly.zero(W1.field) for _ in range(W1.r))
    zero2 = tuple(LaurentPoly.zero(W2.field) for _ in range(W2.r))
    rows = [tuple(vec) + zero2 for vec in W1.row_vectors()]
    rows += [zero1 + tuple(vec) for vec in W2.row_vectors()]
    return echelonize(rows, W1.r + W2.r, W1.u_lo, W1.u_hi,
                      W1.full_below and W2.full_below, field=W1.field)


def enlarge(W: WindowedSubspace, u_lo: Union[int, None] = None,
            u_hi: Union[int, None] = None) -> WindowedSubspace:
    """Re-materialize the subspace on a larger window.

    Widening the bottom of a full_below subspace turns the newly visible part
    of the tail into explicit monomial rows, so index and membership verdicts
    inside the old interior are unchanged.
    """
    new_lo = W.u_lo if u_lo is None else u_lo
    new_hi = W.u_hi if u_hi is None else u_hi
    if new_lo > W.u_lo or new_hi < W.u_hi:
        raise WindowMismatchError("enlarge cannot shrink the window")
    rows = [tuple(vec) for vec in W.row_vectors()]
    if W.full_below:
        for e in range(new_lo, W.u_lo):
            for c in range(W.r):
                vec = [LaurentPoly.zero(W.field) for _ in range(W.r)]
                vec[c] = LaurentPoly.monomial(W.field, e)
                rows.append(tuple(vec))
    return echelonize(rows, W.r, new_lo, new_hi, W.full_below, field=W.field)
