"""Exhaustive solvers for the twelve seed equations.

Four fixing schemes are supported, one per number of coordinate axes
appearing in the striation table (three, two, one, none), plus a generic
partial-assignment solver.  All of them enumerate the free parameters
over GF(8) and keep the assignments satisfying the twelve equations;
with at most five free parameters per scheme (8^5 = 32768 candidates)
brute force is both fast and self-evidently exhaustive.

Solutions are returned in a fixed order: free parameters are swept in
canonical parameter order, each over the element display order, so the
output is lexicographically sorted.  Degenerate assignments (seeds that
fail well-formedness or whose table fails validation) are returned with
valid=False rather than dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf8, phasespace
from .phasespace import PARAM_NAMES, TWELVE_EQUATIONS, SeedSet

SCENARIO_KINDS = ("three-axes", "two-axes", "one-axis", "no-axis", "generic")

# Fixed-parameter names required by each scheme (the rest of the seed is
# implied zero for the axis schemes; see the seed builders below).
_SCHEME_FIXED = {
    "three-axes": ("l1", "l2"),
    "two-axes": ("b11", "b12", "b13", "a21"),
    "one-axis": ("b11", "b12", "b13", "a21", "b22", "b23"),
    "no-axis": ("a11", "b11", "b12", "b13", "a21", "b22", "b23"),
}

MAX_FREE_DEFAULT = 6  # 8^6 assignments; anything larger needs allow_large

_MUL = np.array([[gf8.mul(x, y) for y in range(8)] for x in range(8)], dtype=np.uint8)
_TR = np.array(gf8.TRACE, dtype=np.uint8)
_ELEMS = np.array(gf8.ELEMENTS, dtype=np.uint8)


class InvalidInputError(ValueError):
    """A solver precondition was violated (bad fixing, dependent triple...)."""


class CostGuardError(InvalidInputError):
    """Refused enumeration: too many free parameters without allow_large."""


@dataclass(frozen=True)
class Scenario:
    """A fixing scheme plus its fixed parameter values."""

    kind: str
    fixed: tuple[tuple[str, int], ...]

    @classmethod
    def make(cls, kind: str, fixed: dict[str, int]) -> "Scenario":
        if kind not in SCENARIO_KINDS:
            raise InvalidInputError(f"unknown scenario kind: {kind!r}")
        names = _SCHEME_FIXED.get(kind)
        if names is not None and set(fixed) != set(names):
            raise InvalidInputError(
                f"scenario {kind!r} fixes exactly {', '.join(names)}"
            )
        if kind == "generic":
            for name in fixed:
                if name not in PARAM_NAMES:
                    raise InvalidInputError(f"unknown parameter name: {name!r}")
        for v in fixed.values():
            gf8.check_element(v)
        if kind == "three-axes":
            l1, l2 = fixed["l1"], fixed["l2"]
            if l1 == 0 or l2 == 0 or l1 == l2:
                raise InvalidInputError("l1 and l2 must be distinct and nonzero")
        elif kind in ("two-axes", "one-axis"):
            _require_basis(fixed["b11"], fixed["b12"], fixed["b13"])
        order = names if names is not None else PARAM_NAMES
        return cls(kind=kind, fixed=tuple((n, fixed[n]) for n in order if n in fixed))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "fixed": {n: gf8.to_token(v) for n, v in self.fixed},
        }

    @classmethod
    def from_json(cls, obj) -> "Scenario":
        if not isinstance(obj, dict) or set(obj) != {"kind", "fixed"}:
            raise InvalidInputError('a scenario must be {"kind": ..., "fixed": {...}}')
        fixed = {n: gf8.from_token(t) for n, t in obj["fixed"].items()}
        return cls.make(obj["kind"], fixed)


@dataclass(frozen=True)
class Solution:
    """One satisfying assignment: the full seed, the solved values, validity."""

    seed: SeedSet
    free: tuple[tuple[str, int], ...]
    valid: bool

    def free_values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.free)

    def to_json(self) -> dict:
        return {
            "free": {n: gf8.to_token(v) for n, v in self.free},
            "seed": self.seed.to_json(),
            "valid": self.valid,
        }


def _eval_equations_mask(env: dict[str, np.ndarray | int]) -> np.ndarray | bool:
    """Boolean mask of assignments satisfying all twelve equations."""
    mask = None
    for lhs, rhs in TWELVE_EQUATIONS:
        sides = []
        for side in (lhs, rhs):
            acc = None
            for p, q in side:
                term = _MUL[env[p], env[q]]
                acc = term if acc is None else acc ^ term
            sides.append(_TR[acc])
        eq = sides[0] == sides[1]
        mask = eq if mask is None else mask & eq
    return mask


def enumerate_assignments(
    fixed: dict[str, int], *, allow_large: bool = False
) -> list[dict[str, int]]:
    """All full 12-parameter assignments extending `fixed` that satisfy
    the twelve equations, in lexicographic enumeration order.

    Free parameters run in canonical order, each over the element
    display order.  More than MAX_FREE_DEFAULT free parameters is
    refused unless allow_large is set.
    """
    for name in fixed:
        if name not in PARAM_NAMES:
            raise InvalidInputError(f"unknown parameter name: {name!r}")
    for v in fixed.values():
        gf8.check_element(v)
    free = [n for n in PARAM_NAMES if n not in fixed]
    if len(free) > MAX_FREE_DEFAULT and not allow_large:
        raise CostGuardError(
            f"{len(free)} free parameters means 8^{len(free)} assignments; "
            "pass allow_large to enumerate anyway"
        )
    if not free:
        ok = bool(_eval_equations_mask(dict(fixed)))
        return [dict(fixed)] if ok else []
    n = len(free)
    idx = np.arange(8**n, dtype=np.int64)
    env: dict[str, np.ndarray | int] = dict(fixed)
    for k, name in enumerate(free):
        env[name] = _ELEMS[(idx // 8 ** (n - 1 - k)) % 8]
    mask = _eval_equations_mask(env)
    hits = np.flatnonzero(mask)
    out = []
    for h in hits:
        assignment = dict(fixed)
        for k, name in enumerate(free):
            assignment[name] = int(gf8.ELEMENTS[(h // 8 ** (n - 1 - k)) % 8])
        out.append(assignment)
    return out


def solution_is_valid(seed: SeedSet) -> bool:
    """Well-formed seed whose table passes every validation flag."""
    if not seed.is_well_formed():
        return False
    table = phasespace.build_table(seed, check_seed=False)
    return phasespace.validate_table(table).valid


def _package(assignments, free_names) -> list[Solution]:
    out = []
    for assignment in assignments:
        seed = SeedSet.from_params(assignment)
        free = tuple((n, assignment[n]) for n in free_names)
        out.append(Solution(seed=seed, free=free, valid=solution_is_valid(seed)))
    return out


def solve_generic(fixed: dict[str, int], *, allow_large: bool = False) -> list[Solution]:
    """Solve with an arbitrary partial fixing of the 12 parameters."""
    free_names = [n for n in PARAM_NAMES if n not in fixed]
    return _package(enumerate_assignments(fixed, allow_large=allow_large), free_names)


def _axes_seed_params(l1: int, l2: int, l3: int) -> dict[str, int]:
    return {
        "a11": 0, "b11": l1, "a12": 0, "b12": l2, "a13": 0, "b13": l3,
        "a21": l1, "b21": 0, "a22": l2, "b22": 0, "a23": l3, "b23": 0,
    }


def solve_three_axes(l1: int, l2: int) -> list[Solution]:
    """All l3 completing the three-axes seed (both rows on the axes).

    Uses the reduced three-equation system equivalent to the twelve
    equations on this seed shape:
        tr(l3)    = tr(l2 + l1*l2)
        tr(l1*l3) = tr(l2)
        tr(l2*l3) = tr(l1 + l1*l2)
    """
    gf8.check_element(l1)
    gf8.check_element(l2)
    if l1 == 0 or l2 == 0 or l1 == l2:
        raise InvalidInputError("l1 and l2 must be distinct and nonzero")
    t = gf8.trace
    l1l2 = gf8.mul(l1, l2)
    out = []
    for l3 in gf8.ELEMENTS:
        if (
            t(l3) == t(gf8.add(l2, l1l2))
            and t(gf8.mul(l1, l3)) == t(l2)
            and t(gf8.mul(l2, l3)) == t(gf8.add(l1, l1l2))
        ):
            seed = SeedSet.from_params(_axes_seed_params(l1, l2, l3))
            out.append(
                Solution(seed=seed, free=(("l3", l3),), valid=solution_is_valid(seed))
            )
    return out


def _require_basis(b11: int, b12: int, b13: int) -> None:
    span = {0}
    for b in (b11, b12, b13):
        gf8.check_element(b)
        span |= {b ^ s for s in span}
    if len(span) != 8:
        raise InvalidInputError("b11, b12, b13 must be GF(2)-independent (a basis)")


def solve_two_axes(b11: int, b12: int, b13: int, a21: int) -> list[Solution]:
    """Row 1 on the vertical axis, row 2 on the horizontal one; solves a22, a23."""
    _require_basis(b11, b12, b13)
    gf8.check_element(a21)
    fixed = {
        "a11": 0, "b11": b11, "a12": 0, "b12": b12, "a13": 0, "b13": b13,
        "a21": a21, "b21": 0, "b22": 0, "b23": 0,
    }
    return _package(enumerate_assignments(fixed), ["a22", "a23"])


def solve_one_axis(
    b11: int, b12: int, b13: int, a21: int, b22: int, b23: int
) -> list[Solution]:
    """Row 1 on the vertical axis; solves b21, a22, a23."""
    _require_basis(b11, b12, b13)
    for v in (a21, b22, b23):
        gf8.check_element(v)
    fixed = {
        "a11": 0, "b11": b11, "a12": 0, "b12": b12, "a13": 0, "b13": b13,
        "a21": a21, "b22": b22, "b23": b23,
    }
    return _package(enumerate_assignments(fixed), ["b21", "a22", "a23"])


def solve_no_axis(
    a11: int, b11: int, b12: int, b13: int, a21: int, b22: int, b23: int
) -> list[Solution]:
    """No axis fixed; solves a12, a13, b21, a22, a23 over 8^5 assignments."""
    for v in (a11, b11, b12, b13, a21, b22, b23):
        gf8.check_element(v)
    fixed = {
        "a11": a11, "b11": b11, "b12": b12, "b13": b13,
        "a21": a21, "b22": b22, "b23": b23,
    }
    return _package(enumerate_assignments(fixed), ["a12", "a13", "b21", "a22", "a23"])


def solve_scenario(scenario: Scenario, *, allow_large: bool = False) -> list[Solution]:
    fixed = dict(scenario.fixed)
    if scenario.kind == "three-axes":
        return solve_three_axes(fixed["l1"], fixed["l2"])
    if scenario.kind == "two-axes":
        return solve_two_axes(fixed["b11"], fixed["b12"], fixed["b13"], fixed["a21"])
    if scenario.kind == "one-axis":
        return solve_one_axis(
            fixed["b11"], fixed["b12"], fixed["b13"],
            fixed["a21"], fixed["b22"], fixed["b23"],
        )
    if scenario.kind == "no-axis":
        return solve_no_axis(
            fixed["a11"], fixed["b11"], fixed["b12"], fixed["b13"],
            fixed["a21"], fixed["b22"], fixed["b23"],
        )
    return solve_generic(fixed, allow_large=allow_large)
