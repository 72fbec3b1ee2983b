"""Two-chart Cech cohomology of line bundles on the base line and of truncated
level stacks on its formal thickenings, plus the unipotent Picard dimension.

Charts are U1 = P^1 minus infinity with coordinate u and U2 = P^1 minus zero
with coordinate 1/u; a twist-d section moves across the overlap by
g(u') -> u^d g(1/u).  All section spaces are truncated at a chart degree
bound B, and every report carries the bound so each dimension claim stays an
honest finite statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _linalg
from .errors import ChartError, RangeViolationError, TruncationBoundError, UnsupportedDatumError
from .geometry import P2_LINE, GeometricDatum
from .series import QQ, Field

CHARTS = ("U1", "U2")


@dataclass(frozen=True)
class CechData:
    """Two-chart section model for one twist: polynomial spans of degree <= bound
    on each chart, glued over the overlap by multiplication with u^twist.

    Chart U1 omits the point at infinity and carries the coordinate u; chart
    U2 omits zero and carries 1/u, so its degree-a monomial restricts to
    overlap exponent twist - a.
    """

    twist: int
    bound: int

    def chart_exponents(self) -> range:
        return range(self.bound + 1)

    def overlap_exponents(self) -> range:
        return range(self.twist - self.bound, self.bound + 1)

    def to_overlap(self, chart: str, a: int) -> int:
        if chart == "U1":
            return a
        if chart == "U2":
            return self.twist - a
        raise ChartError(f"no chart named {chart!r}")


def _difference_columns(twists: Sequence[int], B: int, fld: Field):
    """Columns of the Cech difference map on the stacked truncated spaces.

    Basis keys are (level, exponent); chart-1 columns enter with sign +1 and
    chart-2 columns with sign -1 at their overlap exponents.
    """
    one = fld.one
    columns = []
    for chart, sign in (("U1", one), ("U2", -one)):
        for j, d in enumerate(twists):
            cd = CechData(d, B)
            for a in cd.chart_exponents():
                columns.append({(j, cd.to_overlap(chart, a)): sign})
    hull = [(j, e) for j, d in enumerate(twists) for e in CechData(d, B).overlap_exponents()]
    return columns, hull


def _kernel_cokernel(twists: Sequence[int], B: int, fld: Field):
    columns, hull = _difference_columns(twists, B, fld)
    image = _linalg.echelon(columns)
    covered = set(_linalg.pivot_keys(image))
    h0 = len(columns) - len(image)
    reps = [k for k in hull if k not in covered]
    # boundary-pivot contact: a cokernel representative on the hull edge means
    # the truncation may have cut the class off.
    for (j, e) in reps:
        d = twists[j]
        if e in (d - B, B):
            raise TruncationBoundError(
                f"cokernel class at truncation edge (level {j}, exponent {e}); increase B")
    return h0, len(reps), reps, image


def cech_line_bundle(d: int, B: int, fld: Field = QQ):
    """(h0, h1) of the twist-d line bundle on the base line, from the two-chart complex."""
    if B < abs(d) + 2:
        raise TruncationBoundError(f"bound B={B} too small for twist {d}; need B >= |d| + 2")
    h0, h1, _reps, _image = _kernel_cokernel([d], B, fld)
    return h0, h1


@dataclass(frozen=True)
class LevelStack:
    """Twists (d_0, ..., d_i) of the graded pieces of a truncated sheaf."""

    twists: tuple

    @staticmethod
    def for_p2_line(twist: int, depth: int) -> "LevelStack":
        """Stack of the twist-m sheaf truncated at depth i on the plane/line ribbon."""
        return LevelStack(tuple(twist - j for j in range(depth + 1)))

    def __len__(self):
        return len(self.twists)


@dataclass
class RibbonCohomologyReport:
    h0: int
    h1: int
    levels: list           # dicts: d, h0, h1
    levelwise_h0: int
    levelwise_h1: int
    agreement: bool
    transition_surjective: bool
    bound: int

    def to_json(self) -> dict:
        return {
            "h0": self.h0,
            "h1": self.h1,
            "levels": list(self.levels),
            "levelwise": {"h0": self.levelwise_h0, "h1": self.levelwise_h1},
            "agreement": self.agreement,
            "transition_surjective": self.transition_surjective,
            "bound": self.bound,
        }


def _h1_transition_surjective(twists: Sequence[int], B: int, fld: Field) -> bool:
    """Surjectivity of H^1(stack up to l) -> H^1(stack up to l-1) for every l.

    The representatives of the deeper stack are projected (deepest level
    dropped) and reduced against the shallower image; the induced classes must
    span the shallower cokernel.
    """
    for l in range(1, len(twists)):
        small, big = twists[:l], twists[: l + 1]
        _h0s, h1s, reps_small, image_small = _kernel_cokernel(small, B, fld)
        _h0b, _h1b, reps_big, _image_big = _kernel_cokernel(big, B, fld)
        one = fld.one
        induced = []
        for (j, e) in reps_big:
            if j >= l:
                continue
            induced.append(_linalg.reduce_vector({(j, e): one}, image_small))
        if _linalg.rank(induced) != h1s:
            return False
    return True


def ribbon_cohomology(stack: LevelStack, B: int, fld: Field = QQ) -> RibbonCohomologyReport:
    """Cohomology of a truncated level stack, computed twice.

    Once as one block complex over all levels and once level by level; both
    results are reported, and the transition maps between truncation depths
    are checked to be surjective (the Mittag-Leffler mechanism that lets the
    truncated answers assemble).
    """
    if not stack.twists:
        return RibbonCohomologyReport(0, 0, [], 0, 0, True, True, B)
    worst = max(abs(d) for d in stack.twists)
    if B < worst + 2:
        raise TruncationBoundError(f"bound B={B} too small for twists up to |{worst}|")
    levels = []
    for d in stack.twists:
        h0, h1 = cech_line_bundle(d, B, fld)
        levels.append({"d": d, "h0": h0, "h1": h1})
    block_h0, block_h1, _reps, _image = _kernel_cokernel(stack.twists, B, fld)
    sum_h0 = sum(lv["h0"] for lv in levels)
    sum_h1 = sum(lv["h1"] for lv in levels)
    surj = _h1_transition_surjective(stack.twists, B, fld)
    return RibbonCohomologyReport(
        block_h0, block_h1, levels, sum_h0, sum_h1,
        agreement=(block_h0 == sum_h0 and block_h1 == sum_h1),
        transition_surjective=surj, bound=B)


@dataclass
class RestrictionReport:
    chart: str
    ok: bool
    levels: list  # dicts: j, surjective, kernel_dim, level_dim

    def to_json(self) -> dict:
        return {"chart": self.chart, "pass": self.ok, "levels": list(self.levels)}


def restriction_exactness_check(stack: LevelStack, chart: str, B: int,
                                fld: Field = QQ) -> RestrictionReport:
    """Levelwise surjectivity of truncated section restrictions on an affine chart.

    Sections of the stack truncated at depth j restrict onto depth j-1 with
    kernel exactly the level-j sections; this is the affine exactness that
    fails on the overlap, so the overlap is rejected up front.
    """
    if chart not in CHARTS:
        raise ChartError(f"restriction exactness is an affine-chart statement; got {chart!r}")
    one = fld.one
    rows = []
    ok = True
    for j in range(len(stack.twists)):
        dom = [(l, a) for l in range(j + 1) for a in range(B + 1)]
        columns = []
        for key in dom:
            l, _a = key
            columns.append({} if l == j else {key: one})
        image_rank = _linalg.rank([c for c in columns if c])
        codom_dim = j * (B + 1)
        kernel_dim = len(dom) - image_rank
        level_dim = B + 1
        surj = image_rank == codom_dim
        ok = ok and surj and kernel_dim == level_dim
        rows.append({"j": j, "surjective": surj, "kernel_dim": kernel_dim,
                     "level_dim": level_dim})
    return RestrictionReport(chart, ok, rows)


@dataclass
class PicardReport:
    dim: int
    levels: list  # dicts: j, d, h0, h1
    d: int
    h0_vanishing: bool
    bound: int

    def to_json(self) -> dict:
        return {"dim": self.dim, "levels": list(self.levels), "d": self.d,
                "h0_vanishing": self.h0_vanishing, "bound": self.bound,
                "note": "abelianized graded pieces; exact because every graded h0 vanishes"}


def picard_dimension(g: GeometricDatum, depth: int, B: int, fld: Field = QQ) -> PicardReport:
    """Dimension of the unipotent Picard part of the depth-i thickening.

    Sums h^1 of the graded pieces of the unipotent sheaf group, the piece at
    level j being the twist -j line bundle; the grading is exact because every
    piece has vanishing h^0, and that hypothesis is recorded in the report.
    Also reports the discrete invariant d = -(C.C) of the degree quotient.
    """
    if g.kind != P2_LINE:
        raise UnsupportedDatumError("picard dimension is computed for the p2-line datum only")
    if depth < 1:
        raise RangeViolationError("thickening depth must be a positive integer")
    levels = []
    total = 0
    vanishing = True
    for j in range(1, depth + 1):
        d = -j * g.selfint
        h0, h1 = cech_line_bundle(d, B, fld)
        vanishing = vanishing and h0 == 0
        total += h1
        levels.append({"j": j, "d": d, "h0": h0, "h1": h1})
    return PicardReport(total, levels, -g.selfint, vanishing, B)
