"""t-filtered subspaces of K^r, Schur-pair verification, graded slices and Hilbert data.

A LayeredSubspace models a subspace of k((u))((t))^r inside a rectangular
window: one WindowedSubspace per t-level, plus a finite list of generator
vectors kept as closure witnesses.  Levels are authoritative; generators are
witnesses.

Membership is three-valued.  Truncation must distinguish "provably outside"
from "escaped the window", so reductions that reach the distrusted top margin
return Inconclusive instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence, Union

from . import _linalg
from .errors import (ConfigError, NotCocompactError, RangeViolationError,
                     SupportViolationError, WindowMismatchError,
                     WindowTooSmallError)
from .fredholm import (Verdict, WindowedSubspace, direct_sum,
                       fredholm_index, membership)
from .local2d import Local2DElement, Window2D, l2_mul, ord_t_vector
from .series import Field


def as_vector(x, r: int) -> tuple:
    """Coerce a bare element to a rank-1 vector; pass vectors through."""
    if isinstance(x, Local2DElement):
        if r != 1:
            raise SupportViolationError("bare element given where a rank-%d vector is needed" % r)
        return (x,)
    vec = tuple(x)
    if len(vec) != r:
        raise SupportViolationError(f"vector has {len(vec)} components, expected {r}")
    return vec


def scalar_times_vector(a: Local2DElement, vec: Sequence[Local2DElement]) -> tuple:
    return tuple(l2_mul(a, x) for x in vec)


def vector_is_zero(vec) -> bool:
    return not any(vec)


@dataclass(frozen=True)
class LayeredSubspace:
    """Window model of a t-filtered subspace: one windowed space per t-level."""

    field: Field
    r: int
    window: Window2D
    levels: tuple = ()       # ((b, WindowedSubspace), ...) for every b in [t_lo, t_hi)
    generators: tuple = ()   # closure-witness vectors, each a tuple of Local2DElement

    def __post_init__(self):
        by_b = dict(self.levels)
        for b in range(self.window.t_lo, self.window.t_hi):
            if b not in by_b:
                raise ConfigError(f"missing level {b} in layered subspace")
            lvl = by_b[b]
            if lvl.r != self.r or (lvl.u_lo, lvl.u_hi) != (self.window.u_lo, self.window.u_hi):
                raise ConfigError(f"level {b} does not match the layered window/rank")
        object.__setattr__(self, "_by_b", by_b)

    def level(self, b: int) -> WindowedSubspace:
        return self._by_b[b]

    def validate_witnesses(self):
        """Check that each generator's leading u-part passes membership at its level."""
        for vec in self.generators:
            if vector_is_zero(vec):
                continue
            b = ord_t_vector(vec)
            slice_vec = tuple(x.t_slice(b) for x in vec)
            if membership(self.level(b), slice_vec) is not Verdict.IN:
                raise ConfigError("generator leading slice fails membership at its level")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "levels": [{"b": b, "space": lvl.to_json()} for b, lvl in self.levels],
            "generators": [
                [x.to_json(component=c + 1) for c, x in enumerate(vec)]
                for vec in self.generators
            ],
        }

    @staticmethod
    def from_json(obj: dict, window: Window2D, fld: Field) -> "LayeredSubspace":
        levels = tuple(
            (entry["b"], WindowedSubspace.from_json(entry["space"], fld))
            for entry in obj["levels"]
        )
        generators = tuple(
            tuple(Local2DElement.from_json(e, fld) for e in vec)
            for vec in obj["generators"]
        )
        return LayeredSubspace(fld, obj["r"], window, levels, generators)


@dataclass(frozen=True)
class SchurPair:
    """Pair (A, W): A a rank-1 layered subalgebra model containing 1, W its module."""

    algebra: LayeredSubspace
    module: LayeredSubspace
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.algebra.r != 1:
            raise ConfigError("the subalgebra side of a pair must have rank 1")
        if self.algebra.window != self.module.window:
            raise WindowMismatchError("pair sides live on different windows")
        if self.algebra.field != self.module.field:
            raise WindowMismatchError("pair sides live over different fields")

    @property
    def window(self) -> Window2D:
        return self.algebra.window

    @property
    def field(self) -> Field:
        return self.algebra.field

    def to_json(self) -> dict:
        return {
            "A": self.algebra.to_json(),
            "W": self.module.to_json(),
            "window": self.window.to_json(),
            "field": self.field.tag,
            "meta": dict(self.meta),
        }

    @staticmethod
    def from_json(obj: dict) -> "SchurPair":
        fld = Field.from_tag(obj["field"])
        window = Window2D.from_json(obj["window"])
        return SchurPair(
            LayeredSubspace.from_json(obj["A"], window, fld),
            LayeredSubspace.from_json(obj["W"], window, fld),
            dict(obj.get("meta", {})),
        )


def layered_membership(L: LayeredSubspace, x) -> Verdict:
    """Iterated level-by-level reduction of x against L.

    At each step the t^b-coefficient vector of the remainder is reduced
    against levels[b]; a nonzero remainder there means NotIn, otherwise the
    certified level-b representative is subtracted and reduction continues on
    the strictly higher t-order part.  Reaching the distrusted top margin with
    a nonzero remainder is Inconclusive.
    """
    w = L.window
    vec = as_vector(x, L.r)
    for comp in vec:
        for (a, b) in comp.support():
            if not w.contains(a, b):
                raise SupportViolationError(f"term u^{a} t^{b} outside the window")
    rem = list(vec)
    while not vector_is_zero(rem):
        b = ord_t_vector(rem)
        if b >= w.t_trusted_hi:
            return Verdict.INCONCLUSIVE
        slice_vec = tuple(x.t_slice(b) for x in rem)
        if membership(L.level(b), slice_vec) is Verdict.NOT_IN:
            return Verdict.NOT_IN
        lift = tuple(
            Local2DElement.from_dict(L.field, {(e, b): c for e, c in poly.coeffs})
            for poly in slice_vec
        )
        rem = [rem_c - lift_c for rem_c, lift_c in zip(rem, lift)]
    return Verdict.IN


def _absorb_below(vec, L: LayeredSubspace):
    """Drop terms below the u-window when the level at their t-order is full_below."""
    w = L.window
    out = []
    blocked = False
    for comp in vec:
        kept = {}
        for (a, b), c in comp.terms:
            if a < w.u_lo:
                if w.t_lo <= b < w.t_hi and L.level(b).full_below:
                    continue
                blocked = True
            kept[(a, b)] = c
        out.append(Local2DElement.from_dict(comp.field, kept))
    return tuple(out), blocked


def _route_check(L: LayeredSubspace, vec) -> str:
    """Classify a product against the window's trust regions, then decide.

    Returns one of 'in', 'not-in', 'deferred', 'escaped'.  Deferred products
    land inside the window but inside a margin band: the margins exist exactly
    to absorb them, so they carry no verdict.  Escaped products leave the
    representable window altogether, which is margin exhaustion.
    """
    w = L.window
    vec, blocked = _absorb_below(vec, L)
    if vector_is_zero(vec):
        return "in"
    if blocked:
        return "escaped"
    support = [k for comp in vec for k in comp.support()]
    if any(b < w.t_lo or b >= w.t_hi or a >= w.u_hi for (a, b) in support):
        return "escaped"
    if all(b < w.t_trusted_hi and a < w.u_trusted_hi for (a, b) in support):
        verdict = layered_membership(L, vec)
        if verdict is Verdict.IN:
            return "in"
        if verdict is Verdict.NOT_IN:
            return "not-in"
        return "escaped"
    return "deferred"


def _merge(results) -> str:
    if any(r == "not-in" for r in results):
        return "fail"
    if any(r == "escaped" for r in results):
        return "inconclusive"
    return "pass"


@dataclass
class LevelIndexRow:
    b: int
    index_a: Union[int, None]
    index_w: Union[int, None]
    marker_a: Union[str, None] = None
    marker_w: Union[str, None] = None


@dataclass
class SchurReport:
    subalgebra: str
    module_closure: str
    fredholm: str
    verdict: str
    unit: str
    levels: list
    checked: int
    deferred: int
    escaped: int
    failures: list

    def to_json(self) -> dict:
        return {
            "subalgebra": self.subalgebra,
            "module_closure": self.module_closure,
            "fredholm": self.fredholm,
            "verdict": self.verdict,
            "unit": self.unit,
            "levels": [
                {"b": row.b, "index_A": row.index_a, "index_W": row.index_w,
                 "marker_A": row.marker_a, "marker_W": row.marker_w}
                for row in self.levels
            ],
            "tallies": {"checked": self.checked, "deferred": self.deferred,
                        "escaped": self.escaped},
            "failures": list(self.failures),
        }


def _index_or_marker(level: WindowedSubspace, m_u: int):
    try:
        return fredholm_index(level, m_u), None
    except NotCocompactError:
        return None, "not-cocompact"
    except WindowTooSmallError:
        return None, "window-too-small"


def check_schur_pair(pair: SchurPair) -> SchurReport:
    """Run the three Schur-pair verdicts on a windowed pair.

    (1) subalgebra: 1 is in A and products of A-witness pairs never reduce to
    NotIn; (2) module closure: products of A-witnesses with W-witnesses never
    reduce to NotIn inside W; (3) per-level Fredholm indices exist on every
    level of the t-interior.  Pass needs no NotIn and no Fredholm failure;
    any escape or window-too-small makes the overall verdict inconclusive.
    """
    A, W = pair.algebra, pair.module
    w = pair.window
    failures = []
    tallies = {"checked": 0, "deferred": 0, "escaped": 0}

    def run(L, vec, label):
        res = _route_check(L, vec)
        if res in ("in", "not-in"):
            tallies["checked"] += 1
        else:
            tallies[res] += 1
        if res == "not-in":
            failures.append(label)
        return res

    unit_res = run(A, (Local2DElement.one(pair.field),), "unit 1 not in A")
    alg_results = [unit_res]
    a_gens = list(A.generators)
    for i, g in enumerate(a_gens):
        alg_results.append(run(A, g, f"A-generator #{i} fails membership"))
    for i, g in enumerate(a_gens):
        for j in range(i, len(a_gens)):
            prod = scalar_times_vector(g[0], a_gens[j])
            alg_results.append(run(A, prod, f"A-product #{i}*#{j} leaves A"))

    mod_results = []
    for i, wgen in enumerate(W.generators):
        mod_results.append(run(W, wgen, f"W-generator #{i} fails membership"))
    for i, g in enumerate(a_gens):
        for j, wgen in enumerate(W.generators):
            prod = scalar_times_vector(g[0], wgen)
            mod_results.append(run(W, prod, f"module product A#{i}*W#{j} leaves W"))

    rows = []
    fred_fail = fred_inconclusive = False
    for b in range(w.t_lo + w.m_t, w.t_hi - w.m_t):
        ia, ma = _index_or_marker(A.level(b), w.m_u)
        iw, mw = _index_or_marker(W.level(b), w.m_u)
        rows.append(LevelIndexRow(b, ia, iw, ma, mw))
        for marker, lbl in ((ma, "A"), (mw, "W")):
            if marker == "not-cocompact":
                fred_fail = True
                failures.append(f"level {b} of {lbl} is not cocompact")
            elif marker == "window-too-small":
                fred_inconclusive = True

    subalgebra = _merge(alg_results)
    module_closure = _merge(mod_results)
    fredholm = "fail" if fred_fail else ("inconclusive" if fred_inconclusive else "pass")
    parts = (subalgebra, module_closure, fredholm)
    if "fail" in parts:
        verdict = "fail"
    elif "inconclusive" in parts:
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return SchurReport(subalgebra, module_closure, fredholm, verdict,
                       unit_res, rows, tallies["checked"], tallies["deferred"],
                       tallies["escaped"], failures)


def graded_slice(L: LayeredSubspace, i: int, j: int) -> WindowedSubspace:
    """Stacked model of (L ∩ O(i)^r)/(L ∩ O(j)^r): block b of the sum is levels[b]."""
    w = L.window
    if not (w.t_lo <= i < j <= w.t_hi):
        raise RangeViolationError(f"need t_lo <= i < j <= t_hi, got ({i}, {j})")
    out = L.level(i)
    for b in range(i + 1, j):
        out = direct_sum(out, L.level(b))
    return out


def hilbert_function(L: LayeredSubspace, j: int, n: int) -> int:
    """dim of (u^-n k[[u]] stack) ∩ (levels 0..j-1), by exponent filtering.

    Valid because every level is full_below and row-supported inside the
    window: the graded piece is the count of pivots at exponents >= -n.
    """
    w = L.window
    if j < 1:
        raise RangeViolationError("j must be a positive integer")
    if n < 0:
        raise RangeViolationError("n must be nonnegative")
    if not (w.t_lo <= 0 and j <= w.t_hi):
        raise WindowTooSmallError(f"levels 0..{j - 1} not all inside the t-window")
    if not (w.u_lo <= -n and w.u_hi > 0):
        raise WindowTooSmallError(f"u-window does not accommodate exponents [-{n}, 0]")
    total = 0
    for b in range(j):
        pivots = _linalg.pivot_keys(L.level(b).row_dicts())
        total += sum(1 for (e, _c) in pivots if e >= -n)
    return total


@dataclass
class PointIdealReport:
    ok: bool
    dims: list
    jumps: list

    def to_json(self) -> dict:
        return {"pass": self.ok, "dims": list(self.dims), "jumps": list(self.jumps)}


def point_ideal_check(L: LayeredSubspace, n_max: Union[int, None] = None) -> PointIdealReport:
    """Colength-one test for the distinguished point in the degree-1 slice.

    Each degree-n jump dim(U_n ∩ L(0,1)) - dim(U_{n-1} ∩ L(0,1)) must be
    exactly 1; the n = 0 dimension is unconstrained.
    """
    if n_max is None:
        n_max = -L.window.u_lo
    if n_max < 0 or -n_max < L.window.u_lo:
        raise WindowTooSmallError(f"n_max {n_max} outside the u-window range")
    dims = [hilbert_function(L, 1, n) for n in range(n_max + 1)]
    jumps = [dims[n] - dims[n - 1] for n in range(1, n_max + 1)]
    return PointIdealReport(all(j == 1 for j in jumps), dims, jumps)


def pair_equal_in_window(p1: SchurPair, p2: SchurPair) -> bool:
    """True iff every level's echelon rows coincide on both sides."""
    if p1.window != p2.window:
        raise WindowMismatchError("pairs live on different windows")
    if (p1.algebra.r, p1.module.r) != (p2.algebra.r, p2.module.r):
        raise WindowMismatchError("pairs have different ranks")
    for side1, side2 in ((p1.algebra, p2.algebra), (p1.module, p2.module)):
        for b in range(p1.window.t_lo, p1.window.t_hi):
            if side1.level(b).rows != side2.level(b).rows:
                return False
            if side1.level(b).full_below != side2.level(b).full_below:
                return False
    return True
