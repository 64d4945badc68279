"""Exhaustive desk-scale verifiers and the vanishing-verdict engine.

Each verify_* function sweeps the full finite space its statement quantifies
over, returns a VerificationReport, and never samples: passed == True means
every case was covered (sometimes through an exact aggregate such as a
minimum, which covers the same cases without touching each pair).

The verdict engine at the bottom applies the verified statements to one
concrete integral specification and says what they imply about it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .equation import EquationReport, check_dim_equation
from .errors import InvalidInputError
from .partitions import (
    Dominance,
    EpsilonVector,
    Partition,
    dominance_floor,
    enumerate_partitions,
    partition_from_epsilon,
)
from .representations import (
    Eisenstein,
    IntegralSpec,
    RepDescriptor,
    attached_orbit,
    dim_rep,
    is_speh_type,
    top_trivial_block,
    trivial_block_at,
)

DEFAULT_CEX_CAP = 100


@dataclass(frozen=True)
class VerificationReport:
    """What a verifier swept and what it found.

    counterexamples is empty exactly when passed; when the cap truncated the
    list, parameters["counterexamples_total"] holds the full count.
    """

    statement: str
    parameters: dict
    space_size: int
    passed: bool
    counterexamples: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "parameters": self.parameters,
            "space_size": self.space_size,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


def _finish(
    statement: str,
    parameters: dict,
    space_size: int,
    violations: list[dict],
    cex_cap: int,
) -> VerificationReport:
    """Canonicalize violations (sorted, capped) into a report."""
    violations = sorted(violations, key=lambda d: json.dumps(d, sort_keys=True))
    if len(violations) > cex_cap:
        parameters["counterexamples_total"] = len(violations)
        kept = violations[:cex_cap]
    else:
        kept = violations
    return VerificationReport(
        statement=statement,
        parameters=parameters,
        space_size=space_size,
        passed=not violations,
        counterexamples=tuple(kept),
    )


# -- pairwise orbit-size lower bound (rectangular orbits) ----------------------


def verify_lemma1(n: int, cex_cap: int = DEFAULT_CEX_CAP) -> VerificationReport:
    """Any two rectangular orbits (p^q), p >= 2, have rep dims summing past
    n(n-1)/2, so no pair of Speh-type representations can satisfy the
    dimension equation.

    Also checks the mechanism: every such rectangle dominates the all-twos
    floor, whose orbit dimension already exceeds (n^2-n)/2.
    """
    if n < 2:
        raise InvalidInputError(f"verify_lemma1 needs n >= 2, got {n}")
    rects = [
        Partition((p,) * (n // p)) for p in range(n, 1, -1) if n % p == 0
    ]
    floor = dominance_floor(n)
    bound = n * (n - 1) // 2
    space = 0
    violations: list[dict] = []
    for i in range(len(rects)):
        for j in range(i, len(rects)):
            space += 1
            s = rects[i].rep_dim() + rects[j].rep_dim()
            if s <= bound:
                violations.append(
                    {
                        "first": list(rects[i].parts),
                        "second": list(rects[j].parts),
                        "rep_dim_sum": s,
                        "must_exceed": bound,
                    }
                )
    for r in rects:
        space += 1
        if not r.dominates(floor):
            violations.append(
                {"rectangle": list(r.parts), "fails_to_dominate": list(floor.parts)}
            )
    space += 1
    if floor.orbit_dim() <= bound:
        violations.append(
            {
                "floor": list(floor.parts),
                "orbit_dim": floor.orbit_dim(),
                "must_exceed": bound,
            }
        )
    return _finish("lemma1", {"n": n, "rectangles": len(rects)}, space, violations, cex_cap)


# -- the main positivity inequality --------------------------------------------


def lemma2_I(lam: Partition, mu: Partition) -> int:
    """Exact positivity margin for an orbit pair.

    I = n + sum_{i<j} m_i m_j - sum_i i*lam_i, where the m's are the parts
    of mu's transpose.  Positive exactly when orbit_dim(lam) + orbit_dim(mu)
    exceeds n^2 - n; in fact 2I equals that excess.
    """
    if lam.n != mu.n:
        raise InvalidInputError(
            f"lemma2_I needs partitions of the same n, got {lam.n} and {mu.n}"
        )
    if mu.is_trivial_orbit():
        raise InvalidInputError("lemma2_I requires a nontrivial second partition")
    n = lam.n
    m = mu.transpose().parts
    total = sum(m)
    pair_sum = (total * total - sum(x * x for x in m)) // 2
    weighted = sum(i * p for i, p in enumerate(lam.parts, start=1))
    return n + pair_sum - weighted


def verify_lemma2(n: int, cex_cap: int = DEFAULT_CEX_CAP) -> VerificationReport:
    """For every nontrivial mu of n and every nontrivial lam of length at
    most n - len(mu) + 1, the two orbit dimensions sum to more than n^2 - n.

    The zero orbit (1^n) is excluded on both sides: one-dimensional
    representations never enter the integrals.  Coverage is exhaustive but
    aggregated — for each mu the minimum admissible lam orbit dimension is
    compared, which covers every pair; individual pairs are revisited only
    when that minimum exposes a violation.
    """
    if n < 2:
        raise InvalidInputError(f"verify_lemma2 needs n >= 2, got {n}")
    parts = list(enumerate_partitions(n))
    nontrivial = [p for p in parts if not p.is_trivial_orbit()]
    odim = {p: p.orbit_dim() for p in parts}
    bound = n * n - n

    # lam pools keyed by the length bound, cumulative in L.
    by_len: dict[int, list[Partition]] = {}
    for p in nontrivial:
        by_len.setdefault(p.length, []).append(p)
    pool: list[list[Partition]] = [[] for _ in range(n + 1)]
    min_odim = [None] * (n + 1)
    count = [0] * (n + 1)
    running: list[Partition] = []
    best: int | None = None
    for L in range(1, n + 1):
        for p in by_len.get(L, ()):
            running.append(p)
            if best is None or odim[p] < best:
                best = odim[p]
        pool[L] = list(running)
        min_odim[L] = best
        count[L] = len(running)

    space = 0
    violations: list[dict] = []
    for mu in nontrivial:
        m1 = mu.transpose().parts[0]
        L = n - m1 + 1
        space += count[L]
        if min_odim[L] is None:
            continue
        if odim[mu] + min_odim[L] > bound:
            continue
        for lam in pool[L]:
            s = odim[mu] + odim[lam]
            if s <= bound:
                violations.append(
                    {
                        "mu": list(mu.parts),
                        "lambda": list(lam.parts),
                        "orbit_dim_sum": s,
                        "must_exceed": bound,
                    }
                )
    return _finish("lemma2", {"n": n}, space, violations, cex_cap)


# -- reduction of the main inequality to near-rectangular cases ----------------


@dataclass(frozen=True)
class Lemma2Case:
    """One near-rectangular case partition (a^p1, (a-1)^p2) in the reduction.

    Invariants: a >= 2, p1 >= 1, p2 >= 0; with n = a*p1 + (a-1)*p2 and
    m1 = n - (p1+p2) + 1, either a == 2 and n >= 2*m1 - 2, or a >= 3 and n
    lies in the window (a*m1-(a+1))/(a-1) < n <= ((a-1)*m1-a)/(a-2).
    """

    a: int
    p1: int
    p2: int
    partition: Partition

    def __post_init__(self) -> None:
        if self.a < 2 or self.p1 < 1 or self.p2 < 0:
            raise InvalidInputError(
                f"bad case shape a={self.a}, p1={self.p1}, p2={self.p2}"
            )
        n = self.a * self.p1 + (self.a - 1) * self.p2
        s = self.p1 + self.p2
        m1 = n - s + 1
        if not 2 <= self.a <= m1:
            raise InvalidInputError(f"case a={self.a} outside [2, {m1}]")
        if self.a == 2:
            if n < 2 * m1 - 2:
                raise InvalidInputError(f"a=2 case needs n >= 2*m1-2, got n={n}, m1={m1}")
        else:
            left = Fraction(self.a * m1 - (self.a + 1), self.a - 1)
            right = Fraction((self.a - 1) * m1 - self.a, self.a - 2)
            if not (left < n <= right):
                raise InvalidInputError(
                    f"a={self.a} case outside its window: {left} < {n} <= {right} fails"
                )
        expected = (self.a,) * self.p1 + (self.a - 1,) * self.p2
        if self.partition.parts != expected:
            raise InvalidInputError(
                f"case partition {self.partition} does not match shape {list(expected)}"
            )


def lemma2_reduction_cases(n: int, m1: int) -> list[Lemma2Case]:
    """The near-rectangular partitions the main inequality reduces to.

    For each a in [2, m1], the candidate has p2 = a*s - n parts of a-1 and
    p1 = s - p2 parts of a, where s = n - m1 + 1 is the length bound.  A
    candidate is kept when both counts are admissible (p1 >= 1, p2 >= 0)
    and n lies in the a-window; the result can be empty.
    """
    if n < 2:
        raise InvalidInputError(f"lemma2_reduction_cases needs n >= 2, got {n}")
    if not 2 <= m1 <= n:
        raise InvalidInputError(f"m1 must be in [2, n], got m1={m1}, n={n}")
    s = n - m1 + 1
    cases: list[Lemma2Case] = []
    for a in range(2, m1 + 1):
        p2 = a * s - n
        p1 = s - p2
        if p1 < 1 or p2 < 0:
            continue
        if a >= 3:
            left = Fraction(a * m1 - (a + 1), a - 1)
            right = Fraction((a - 1) * m1 - a, a - 2)
            if not (left < n <= right):
                continue
        cases.append(
            Lemma2Case(
                a=a, p1=p1, p2=p2, partition=Partition((a,) * p1 + (a - 1,) * p2)
            )
        )
    return cases


def verify_lemma2_reduction(n: int, cex_cap: int = DEFAULT_CEX_CAP) -> VerificationReport:
    """Three checks that the near-rectangular reduction is sound at this n.

    (i)   every case partition satisfies the positivity inequality against
          every nontrivial mu with the matching transpose head m1 (for the
          a=2, p2=0 rectangles, the margin is also recomputed through the
          alternate pair-sum formula and the two must agree);
    (ii)  every candidate lam (head at most m1-1, length at most n-m1+1)
          dominates some case partition, so the cases really are the floor
          of the search space;
    (iii) for a >= 3, whenever n lies in the a-window, n is at least
          (3a-2)(m1-1)/(3a-4) — the margin the window argument consumes.

    The bare-rational comparison "window-left >= (3a-2)(m1-1)/(3a-4)" fails
    at four small (a, m1) corners even though every integer n in those
    windows passes; such corners are reported in
    parameters["literal_side_inequality_failures"], not as counterexamples.
    """
    if n < 2:
        raise InvalidInputError(f"verify_lemma2_reduction needs n >= 2, got {n}")
    space = 0
    violations: list[dict] = []
    literal_notes: list[dict] = []
    mus_by_len: dict[int, list[Partition]] = {}
    for mu in enumerate_partitions(n):
        if mu.is_trivial_orbit():
            continue
        mus_by_len.setdefault(mu.length, []).append(mu)

    for m1 in range(2, n + 1):
        cases = lemma2_reduction_cases(n, m1)
        s = n - m1 + 1

        # (i) positivity on the case partitions
        for case in cases:
            for mu in mus_by_len.get(m1, ()):
                space += 1
                margin = lemma2_I(case.partition, mu)
                if margin <= 0:
                    violations.append(
                        {
                            "branch": "i",
                            "case": list(case.partition.parts),
                            "mu": list(mu.parts),
                            "margin": margin,
                        }
                    )
                if case.a == 2 and case.p2 == 0:
                    m = mu.transpose().parts
                    pair_sum = (sum(m) ** 2 - sum(x * x for x in m)) // 2
                    alt = pair_sum + (n * m1 - n * n) // 2
                    if alt != margin:
                        violations.append(
                            {
                                "branch": "i-alt",
                                "case": list(case.partition.parts),
                                "mu": list(mu.parts),
                                "margin": margin,
                                "alternate": alt,
                            }
                        )

        # (ii) the cases are dominated by every candidate lam
        for lam in enumerate_partitions(n, max_length=s):
            if lam.parts[0] > m1 - 1:
                continue
            space += 1
            if not any(lam.dominates(c.partition) for c in cases):
                violations.append(
                    {
                        "branch": "ii",
                        "m1": m1,
                        "lambda": list(lam.parts),
                        "cases": [list(c.partition.parts) for c in cases],
                    }
                )

        # (iii) window margin for a >= 3
        for a in range(3, m1 + 1):
            left = Fraction(a * m1 - (a + 1), a - 1)
            right = Fraction((a - 1) * m1 - a, a - 2)
            if not (left < n <= right):
                continue
            space += 1
            needed = Fraction((3 * a - 2) * (m1 - 1), 3 * a - 4)
            if n < needed:
                violations.append(
                    {
                        "branch": "iii",
                        "a": a,
                        "m1": m1,
                        "n": n,
                        "needed": f"{needed.numerator}/{needed.denominator}",
                    }
                )
            if left < needed:
                literal_notes.append(
                    {
                        "a": a,
                        "m1": m1,
                        "window_left": f"{left.numerator}/{left.denominator}",
                        "needed": f"{needed.numerator}/{needed.denominator}",
                    }
                )

    params = {"n": n, "literal_side_inequality_failures": literal_notes}
    return _finish("lemma2_reduction", params, space, violations, cex_cap)


# -- short orbits --------------------------------------------------------------


def verify_prop3(n: int, cex_cap: int = DEFAULT_CEX_CAP) -> VerificationReport:
    """Any two orbits of length at most n/2 have rep dims summing past
    n(n-1)/2, and each such orbit dominates the all-twos floor."""
    if n < 2:
        raise InvalidInputError(f"verify_prop3 needs n >= 2, got {n}")
    lams = list(enumerate_partitions(n, max_length=n // 2))
    floor = dominance_floor(n)
    bound = n * (n - 1) // 2
    space = 0
    violations: list[dict] = []
    dims = {p: p.rep_dim() for p in lams}
    for i in range(len(lams)):
        for j in range(i, len(lams)):
            space += 1
            s = dims[lams[i]] + dims[lams[j]]
            if s <= bound:
                violations.append(
                    {
                        "first": list(lams[i].parts),
                        "second": list(lams[j].parts),
                        "rep_dim_sum": s,
                        "must_exceed": bound,
                    }
                )
    for lam in lams:
        space += 1
        if not lam.dominates(floor):
            violations.append(
                {"orbit": list(lam.parts), "fails_to_dominate": list(floor.parts)}
            )
    return _finish(
        "prop3", {"n": n, "orbits": len(lams)}, space, violations, cex_cap
    )


# -- residual block bookkeeping -------------------------------------------------


def residual_bound(n: int, m1s: tuple[int, ...] | list[int]) -> int:
    """What remains of the first trivial block after paying n - m for each
    later block: sum(m) - (k-1)*n - 1.

    Computed by the step recursion r_1 = m_1 - 1, r_{j+1} = r_j - (n - m_{j+1})
    and cross-checked against the closed form.  May be negative.
    """
    m1s = tuple(m1s)
    if not m1s:
        raise InvalidInputError("residual_bound needs at least one block")
    if n < 2:
        raise InvalidInputError(f"residual_bound needs n >= 2, got {n}")
    for m in m1s:
        if not 1 <= m <= n - 1:
            raise InvalidInputError(f"block {m} outside [1, {n - 1}]")
    r = m1s[0] - 1
    for m in m1s[1:]:
        r -= n - m
    closed = sum(m1s) - (len(m1s) - 1) * n - 1
    assert r == closed
    return closed


def check_corollary1(n: int, l: int, m1s: tuple[int, ...] | list[int]) -> bool:
    """True when l trivial leading blocks are jointly too large for the
    equation: sum(m) >= n(l-1) + 2."""
    m1s = tuple(m1s)
    if l < 2:
        raise InvalidInputError(f"check_corollary1 needs l >= 2, got {l}")
    if len(m1s) != l:
        raise InvalidInputError(f"expected {l} blocks, got {len(m1s)}")
    if n < 2:
        raise InvalidInputError(f"check_corollary1 needs n >= 2, got {n}")
    for m in m1s:
        if not 1 <= m <= n - 1:
            raise InvalidInputError(f"block {m} outside [1, {n - 1}]")
    return sum(m1s) >= n * (l - 1) + 2


def verify_prop4(
    n: int, l: int, mode: str = "paper", cex_cap: int = DEFAULT_CEX_CAP
) -> VerificationReport:
    """Blocks obeying the dimension budget must be jointly large.

    Integer search: over l trivial blocks m with sum m(n-m) <= n(n-1)/2,
    check sum(m) >= n(l-1) + 2.  In "paper" mode every block ranges over
    (n/2, n-1], the regime the statement asserts; in "strict" mode the last
    block ranges over [1, n-1], which is *expected* to produce violations —
    the report then documents the exact gap (small last blocks).

    In paper mode the closed-form bound l*n/2 + sqrt((l^2-2l)n^2 + 2ln)/2
    >= (l-1)n + 2 is also checked, exactly: both sides square to integers,
    so no tolerance is needed (any float tolerance down to 0 is satisfied).
    """
    if n < 4:
        raise InvalidInputError(f"verify_prop4 needs n >= 4, got {n}")
    if l < 3:
        raise InvalidInputError(f"verify_prop4 needs l >= 3, got {l}")
    if mode not in ("paper", "strict"):
        raise InvalidInputError(f"mode must be 'paper' or 'strict', got {mode!r}")
    budget = n * (n - 1) // 2
    threshold = n * (l - 1) + 2
    big = tuple(range(n - 1, n // 2, -1))  # every m with m > n/2, m <= n-1
    space = 0
    feasible = 0
    violations: list[dict] = []

    if mode == "paper":
        tuples = itertools.combinations_with_replacement(big, l)
        for tup in tuples:
            space += 1
            if sum(m * (n - m) for m in tup) > budget:
                continue
            feasible += 1
            if sum(tup) < threshold:
                violations.append(
                    {"blocks": list(tup), "block_sum": sum(tup), "required": threshold}
                )
    else:
        for first in itertools.combinations_with_replacement(big, l - 1):
            head_cost = sum(m * (n - m) for m in first)
            for mj in range(n - 1, 0, -1):
                space += 1
                if head_cost + mj * (n - mj) > budget:
                    continue
                feasible += 1
                if sum(first) + mj < threshold:
                    violations.append(
                        {
                            "blocks": list(first) + [mj],
                            "block_sum": sum(first) + mj,
                            "required": threshold,
                        }
                    )

    params: dict = {
        "n": n,
        "l": l,
        "mode": mode,
        "feasible_count": feasible,
        "vacuous": feasible == 0,
    }
    if mode == "paper":
        # closed form, exactly: sqrt(D) >= (l-2)n + 4 with D = (l^2-2l)n^2 + 2ln
        disc = (l * l - 2 * l) * n * n + 2 * l * n
        rhs = (l - 2) * n + 4
        holds = disc >= rhs * rhs
        params["closed_form"] = {"disc": disc, "rhs_sqrt": rhs, "holds": holds}
        space += 1
        if not holds:
            violations.append(
                {"kind": "closed-form", "disc": disc, "rhs_sqrt": rhs}
            )
    return _finish("prop4", params, space, violations, cex_cap)


def verify_prop5(
    n: int, q: int, l: int, cex_cap: int = DEFAULT_CEX_CAP
) -> VerificationReport:
    """With a rectangular orbit (p^q) absorbing the rest of the budget, the
    l-1 leading trivial blocks must leave residual at least n - q + 1.

    Integer search: blocks m in (n/2, n-1] with sum m(n-m) <= n(q-1)/2 must
    have residual_bound >= n - q + 1.  The closed-form minimizer check is
    performed exactly when the minimizer lies within the block range
    (2(l-1)(n-1) <= n(q-1)); otherwise the feasible region is empty and the
    closed form is flagged vacuous rather than evaluated outside its domain.
    """
    if n < 4:
        raise InvalidInputError(f"verify_prop5 needs n >= 4, got {n}")
    if q < 1 or n % q != 0 or n // q < 2:
        raise InvalidInputError(
            f"q must divide n with quotient >= 2, got n={n}, q={q}"
        )
    if l < 3:
        raise InvalidInputError(f"verify_prop5 needs l >= 3, got {l}")
    p = n // q
    budget = n * (q - 1) // 2
    required = n - q + 1
    big = tuple(range(n - 1, n // 2, -1))
    space = 0
    feasible = 0
    violations: list[dict] = []
    for tup in itertools.combinations_with_replacement(big, l - 1):
        space += 1
        if sum(m * (n - m) for m in tup) > budget:
            continue
        feasible += 1
        rb = residual_bound(n, tup)
        if rb < required:
            violations.append(
                {"blocks": list(tup), "residual_bound": rb, "required": required}
            )

    # closed form at the constrained minimizer m* = n/2 + sqrt(D)/(2(l-1)),
    # D = (l-1)^2 n^2 - 2n(l-1)(q-1): residual > n - q + 1 iff sqrt(D) > R.
    applicable = 2 * (l - 1) * (n - 1) <= n * (q - 1)
    closed: dict = {"applicable": applicable}
    if applicable:
        disc = (l - 1) * (l - 1) * n * n - 2 * n * (l - 1) * (q - 1)
        rhs = (l - 1) * n - 2 * (q - 2)
        holds = rhs < 0 or disc > rhs * rhs
        closed.update({"disc": disc, "rhs_sqrt": rhs, "holds": holds})
        space += 1
        if not holds:
            violations.append({"kind": "closed-form", "disc": disc, "rhs_sqrt": rhs})
    else:
        closed["vacuous"] = True

    params = {
        "n": n,
        "q": q,
        "l": l,
        "p": p,
        "feasible_count": feasible,
        "vacuous": feasible == 0,
        "closed_form": closed,
    }
    return _finish("prop5", params, space, violations, cex_cap)


# -- character patterns ---------------------------------------------------------


def verify_epsilon_orbit_claim(
    n: int, p: int, q: int, cex_cap: int = DEFAULT_CEX_CAP
) -> VerificationReport:
    """Patterns with at least n-q+1 nonzero entries never attach an orbit
    dominated by (or equal to) the rectangle (p^q).

    Sweeps all 2^(n-1) bit patterns, keeping those above the threshold; for
    each, the attached orbit must compare greater or incomparable to the
    rectangle.  Also records that the boundary pattern with zeros exactly at
    p, 2p, ..., (q-1)p — one nonzero entry short of the threshold — attaches
    precisely (p^q), which is why the threshold is sharp.
    """
    if p < 2 or q < 1 or p * q != n:
        raise InvalidInputError(
            f"need n == p*q with p >= 2, got n={n}, p={p}, q={q}"
        )
    target = Partition((p,) * q)
    need = n - q + 1
    space = 0
    violations: list[dict] = []
    for bits in itertools.product((0, 1), repeat=n - 1):
        if sum(bits) < need:
            continue
        space += 1
        eps = EpsilonVector(n, bits)
        lam = partition_from_epsilon(eps)
        rel = lam.compare(target)
        if rel in (Dominance.LESS, Dominance.EQUAL):
            violations.append(
                {
                    "epsilon": str(eps),
                    "orbit": list(lam.parts),
                    "relation": rel.value,
                    "rectangle": list(target.parts),
                }
            )
    boundary_bits = [1] * (n - 1)
    for k in range(1, q):
        boundary_bits[k * p - 1] = 0
    boundary = partition_from_epsilon(EpsilonVector(n, boundary_bits))
    params = {
        "n": n,
        "p": p,
        "q": q,
        "min_nonzero": need,
        "vacuous": space == 0,
        "boundary_pattern_recovers_rectangle": boundary == target,
    }
    return _finish("epsilon_orbit", params, space, violations, cex_cap)


# -- the verdict engine ----------------------------------------------------------


@dataclass(frozen=True)
class Vanishes:
    """The integral vanishes; `by` names the statement that forces it."""

    by: str
    witness: dict


@dataclass(frozen=True)
class EquationFails:
    """The dimension equation cannot hold for this shape of data."""

    by: str
    equation_report: EquationReport


@dataclass(frozen=True)
class NotApplicable:
    """The equation fails numerically and no covered pattern explains it."""

    reason: str


@dataclass(frozen=True)
class NotConcluded:
    """The equation holds but no verified statement decides vanishing."""

    reason: str


Verdict = Union[Vanishes, EquationFails, NotApplicable, NotConcluded]


def verdict_to_json(v: Verdict) -> dict:
    if isinstance(v, Vanishes):
        return {"verdict": "vanishes", "by": v.by, "witness": v.witness}
    if isinstance(v, EquationFails):
        return {
            "verdict": "equation_fails",
            "by": v.by,
            "equation_report": v.equation_report.to_json(),
        }
    if isinstance(v, NotApplicable):
        return {"verdict": "not_applicable", "reason": v.reason}
    if isinstance(v, NotConcluded):
        return {"verdict": "not_concluded", "reason": v.reason}
    raise InvalidInputError(f"not a verdict: {v!r}")


def _eisenstein_with_rect_head(rep: RepDescriptor) -> bool:
    """Induced from at least two blocks, leading constituent Speh-type with
    parts >= 2 (a nontrivial rectangle)."""
    if not isinstance(rep, Eisenstein):
        return False
    head = attached_orbit(rep.constituents[0])
    rect = head.rectangle()
    return rect is not None and rect[0] >= 2


def vanishing_verdict(spec: IntegralSpec) -> Verdict:
    """Decide what the verified statements say about one integral.

    The cascade mirrors the order in which the statements gain purchase:
    rectangular-pair obstruction first, then the numeric equation, then the
    induced-with-trivial-top patterns in increasing generality.  Soundness
    over completeness throughout — every Vanishes/EquationFails carries the
    inequalities it re-verified, and anything outside the covered patterns
    falls through to NotApplicable/NotConcluded.
    """
    if spec.l < 2:
        raise InvalidInputError(f"vanishing_verdict needs at least 2 representations")
    n = spec.n
    reps = spec.representations
    l = spec.l
    report = check_dim_equation(spec)

    # Two Speh-type representations: their dimensions alone overflow the
    # budget, so the equation must have failed.
    if sum(1 for r in reps if is_speh_type(r)) >= 2:
        assert not report.holds, "two rectangular orbits cannot satisfy the equation"
        return EquationFails(by="lemma1", equation_report=report)

    if not report.holds:
        if l == 2:
            a, b = reps
            for x, y in ((a, b), (b, a)):
                if _eisenstein_with_rect_head(x) and (
                    is_speh_type(y) or _eisenstein_with_rect_head(y)
                ):
                    short = all(
                        attached_orbit(r).length <= n // 2 for r in reps
                    )
                    if short:
                        return EquationFails(by="prop3", equation_report=report)
        return NotApplicable(
            reason=(
                f"dimension equation fails ({report.lhs} != {report.rhs}) "
                "and no covered failure pattern applies"
            )
        )

    # Equation holds.  Look for a pattern that still forces vanishing.
    reasons: list[str] = []

    if l == 2:
        for i, r in enumerate(reps):
            m = top_trivial_block(r)
            if m is not None:
                return Vanishes(
                    by="prop1",
                    witness={
                        "representation_index": i,
                        "top_trivial_block": m,
                        "equation_report": report.to_json(),
                    },
                )
        return NotConcluded(
            reason="prop1: no representation is induced with a one-dimensional "
            "leading constituent"
        )

    # l >= 3
    tops = [top_trivial_block(r) for r in reps]
    if all(m is not None for m in tops):
        total = sum(tops)
        threshold = n * (l - 1) + 2
        if total >= threshold:
            return Vanishes(
                by="cor1",
                witness={
                    "top_trivial_blocks": tops,
                    "block_sum": total,
                    "required": threshold,
                    "equation_report": report.to_json(),
                },
            )
        reasons.append(f"cor1: leading block sum {total} < {threshold}")
    else:
        reasons.append(
            "cor1: not every representation is induced with a one-dimensional "
            "leading constituent"
        )

    first, last = reps[:-1], reps[-1]
    first_tops = [top_trivial_block(r) for r in first]
    if all(m is not None and 2 * m > n for m in first_tops):
        if isinstance(last, Eisenstein):
            threshold = n * (l - 1) + 2
            small_blocks = []
            for j in range(1, len(last.blocks) + 1):
                mj = trivial_block_at(last, j)
                if mj is None:
                    continue
                if 2 * mj > n:
                    total = sum(first_tops) + mj
                    if total >= threshold:
                        return Vanishes(
                            by="prop4",
                            witness={
                                "leading_blocks": first_tops,
                                "distinguished_block": mj,
                                "block_position": j,
                                "block_sum": total,
                                "required": threshold,
                                "equation_report": report.to_json(),
                            },
                        )
                    reasons.append(
                        f"prop4: block sum {total} < {threshold} despite matching shape"
                    )
                else:
                    small_blocks.append(mj)
            if small_blocks:
                reasons.append(
                    f"prop4: trivial block sizes {small_blocks} do not exceed n/2, "
                    "outside the covered range"
                )
        if is_speh_type(last):
            rect = attached_orbit(last).rectangle()
            assert rect is not None
            p, q = rect
            rb = residual_bound(n, first_tops)
            required = n - q + 1
            if rb >= required:
                return Vanishes(
                    by="prop5",
                    witness={
                        "leading_blocks": first_tops,
                        "rectangle": [p, q],
                        "residual_bound": rb,
                        "required": required,
                        "equation_report": report.to_json(),
                    },
                )
            reasons.append(f"prop5: residual bound {rb} < {required}")
        if not isinstance(last, Eisenstein) and not is_speh_type(last):
            reasons.append(
                "residual patterns: last representation is neither Speh-type nor "
                "induced with a trivial block"
            )
    else:
        reasons.append(
            "residual patterns: leading representations are not all induced with "
            "a trivial top block exceeding n/2"
        )

    return NotConcluded(reason=reasons[0])
