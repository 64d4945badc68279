"""
Vanishing verdicts for concrete integrals
==========================================

The decision engine takes one integral specification and reports what the
verified statements imply: Vanishes (with the statement that forces it and
a witness), EquationFails (the budget cannot balance for this shape),
NotApplicable (budget off, no covered pattern), or NotConcluded (budget
balances, nothing decides).  Soundness over completeness.
"""

import json

from dimeq import (
    Eisenstein,
    ExplicitOrbit,
    Generic,
    IntegralSpec,
    Partition,
    Speh,
    TrivialConstituent,
    minimal_eisenstein,
    vanishing_verdict,
    verdict_to_json,
)

T = TrivialConstituent


def show(label, spec):
    v = verdict_to_json(vanishing_verdict(spec))
    print(f"{label}:")
    print(" ", json.dumps(v))
    return v


# two trivially-headed Eisenstein series on GL_5: equation balances
# (4 + 6 = 10), and the leading one-dimensional block forces vanishing
show("prop1 pair", IntegralSpec(5, (
    Eisenstein((4, 1), (T(4), T(1))),
    Eisenstein((3, 2), (T(3), T(2))),
)))

# two Speh blocks: the budget cannot balance, certified by the rectangle
# pair obstruction
show("speh pair", IntegralSpec(4, (Speh(2, 2), Speh(2, 2))))

# three minimal Eisenstein series on GL_6: 5+5+5 = 15 balances and the
# leading blocks are jointly too large -> vanishes
show("minimal triple", IntegralSpec(6, (minimal_eisenstein(6),) * 3))

# same shape on GL_5 misses the budget (12 != 10): nothing applies
show("minimal triple, wrong n", IntegralSpec(5, (minimal_eisenstein(5),) * 3))

# equation off AND both orbits short with a rectangular head: the failure
# itself is certified by the short-orbit pair statement
show("short-orbit mismatch", IntegralSpec(6, (
    Eisenstein((4, 2), (Speh(2, 2), Generic(2))),
    Speh(2, 3),
)))

# a long residual example on GL_16: two trivially-headed towers and one
# Speh block; 15 + 41 + 64 = 120 balances, and the residual bound of the
# leading blocks clears the rectangle's threshold (11 >= 9)
show("residual rectangle", IntegralSpec(16, (
    Eisenstein((15, 1), (T(15), T(1))),
    Eisenstein((13, 2, 1), (T(13), T(2), T(1))),
    Speh(2, 8),
)))

# orbits alone are not enough when no covered pattern fits: 3 + 3 = 6
# balances on GL_4 but neither factor is induced with a trivial head
show("undecided", IntegralSpec(4, (
    ExplicitOrbit(Partition([2, 1, 1])),
    ExplicitOrbit(Partition([2, 1, 1])),
)))
