"""The dimension equation, its full variant, and orbit-level solution search.

The central bookkeeping identity for an l-tuple of representations of GL_n:
the representation dimensions must sum to n(n-1)/2 for the associated global
integral to have a chance of being nonvanishing; the "full" variant uses
n^2 - 1, the dimension budget before reduction to the mirabolic.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .errors import InvalidInputError, ResourceLimitError
from .partitions import Partition, dominance_floor, enumerate_partitions
from .representations import IntegralSpec, dim_rep, minimal_eisenstein

DEFAULT_MAX_N = 12
DEFAULT_MAX_L = 4


@dataclass(frozen=True)
class EquationReport:
    """Outcome of a dimension-equation check.  slack = lhs - rhs."""

    lhs: int
    rhs: int
    holds: bool
    slack: int

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "slack": self.slack}


def check_dim_equation(spec: IntegralSpec) -> EquationReport:
    """sum of rep dims == n(n-1)/2, the reduced (mirabolic) budget."""
    if spec.n < 2:
        raise InvalidInputError(f"dimension equation needs n >= 2, got {spec.n}")
    lhs = sum(dim_rep(r) for r in spec.representations)
    rhs = spec.n * (spec.n - 1) // 2
    return EquationReport(lhs=lhs, rhs=rhs, holds=lhs == rhs, slack=lhs - rhs)


def check_dim_equation_full(spec: IntegralSpec) -> EquationReport:
    """sum of rep dims == n^2 - 1, the unreduced budget; needs l >= 3."""
    if spec.l < 3:
        raise InvalidInputError(
            f"full dimension equation needs at least 3 representations, got {spec.l}"
        )
    lhs = sum(dim_rep(r) for r in spec.representations)
    rhs = spec.n * spec.n - 1
    return EquationReport(lhs=lhs, rhs=rhs, holds=lhs == rhs, slack=lhs - rhs)


def reduce_to_whittaker_form(n: int) -> tuple[int, int, int]:
    """(generic dim, minimal nonzero dim, equation target) for GL_n.

    The generic orbit (n) has representation dimension n(n-1)/2, which is
    exactly the equation target: a generic representation alone saturates
    the budget.  The minimal Eisenstein representation contributes n-1, the
    smallest nonzero dimension.  The identity generic == target is asserted.
    """
    if n < 2:
        raise InvalidInputError(f"reduce_to_whittaker_form needs n >= 2, got {n}")
    generic = Partition((n,)).rep_dim()
    minimal = dim_rep(minimal_eisenstein(n))
    target = n * (n - 1) // 2
    assert generic == target
    assert minimal == n - 1
    return (generic, minimal, target)


def enumerate_orbit_solutions(
    n: int,
    l: int,
    exclude_trivial: bool = False,
    max_one_dominant: bool = False,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_l: int = DEFAULT_MAX_L,
) -> list[tuple[Partition, ...]]:
    """All multisets of l orbits of GL_n whose rep dims sum to n(n-1)/2.

    Solutions are unordered: each is returned once, its partitions sorted
    largest-first lexicographically, and the solution list itself sorted the
    same way.  exclude_trivial drops the zero orbit (1^n) from the alphabet;
    max_one_dominant keeps only solutions in which at most one orbit
    dominates the all-twos floor (a no-op in practice — no solution can
    afford two such orbits — but checkable rather than assumed).

    Refuses searches beyond (max_n, max_l) with ResourceLimitError.
    """
    if n < 2:
        raise InvalidInputError(f"solution search needs n >= 2, got {n}")
    if l < 1:
        raise InvalidInputError(f"solution search needs l >= 1, got {l}")
    if n > max_n or l > max_l:
        raise ResourceLimitError(
            f"solution search n={n}, l={l} exceeds bounds max_n={max_n}, max_l={max_l}"
        )

    alphabet = list(enumerate_partitions(n))
    if exclude_trivial:
        alphabet = [p for p in alphabet if not p.is_trivial_orbit()]
    # Sort by dimension so the recursion can prune on partial sums.
    alphabet.sort(key=lambda p: (p.rep_dim(), p.parts))
    dims = [p.rep_dim() for p in alphabet]
    target = n * (n - 1) // 2
    found: list[tuple[int, ...]] = []

    def rec(start: int, slots: int, need: int, acc: tuple[int, ...]) -> None:
        if slots == 1:
            lo = bisect.bisect_left(dims, need, start)
            hi = bisect.bisect_right(dims, need, start)
            for i in range(lo, hi):
                found.append(acc + (i,))
            return
        maxd = dims[-1]
        for i in range(start, len(dims)):
            d = dims[i]
            if d * slots > need:
                break  # dims ascending: every later choice overshoots too
            if d + maxd * (slots - 1) < need:
                continue
            rec(i, slots - 1, need - d, acc + (i,))

    if alphabet:
        rec(0, l, target, ())

    solutions = [
        tuple(sorted((alphabet[i] for i in idxs), key=lambda p: p.parts, reverse=True))
        for idxs in found
    ]
    if max_one_dominant:
        floor = dominance_floor(n)
        solutions = [
            sol for sol in solutions if sum(p.dominates(floor) for p in sol) <= 1
        ]
    solutions.sort(key=lambda sol: tuple(p.parts for p in sol), reverse=True)
    return solutions
