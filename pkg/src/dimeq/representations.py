"""Representation descriptors and their attached orbits.

A descriptor records just enough about an automorphic representation of
GL_n to do dimension bookkeeping: which unipotent orbit is attached to it.
Induced (Eisenstein) descriptors carry their parabolic block sizes and
constituent descriptors; the attached orbit is the componentwise sum of the
constituents' orbits, and the dimension is computed along both routes
(orbit route and blocks-plus-constituents route) and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidInputError
from .partitions import Partition


@dataclass(frozen=True)
class Generic:
    """A representation with full Whittaker support on GL_n; orbit (n)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError(f"Generic needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Speh:
    """The square-integrable residual block on GL_{p*q}; orbit (p^q).

    q = 1 reduces to the generic orbit (p); p = 1 is the one-dimensional
    representation (orbit (1^q)), constructible here but banned at the top
    level of an integral specification.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise InvalidInputError(f"Speh needs p, q >= 1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class TrivialConstituent:
    """The one-dimensional representation of GL_n; orbit (1^n).

    Only meaningful as an Eisenstein constituent; rejected at top level.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError(f"TrivialConstituent needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class ExplicitOrbit:
    """Escape hatch: a representation known only through its attached orbit."""

    orbit: Partition

    def __post_init__(self) -> None:
        if not isinstance(self.orbit, Partition):
            raise InvalidInputError("ExplicitOrbit needs a Partition")
        if self.orbit.length == 0:
            raise InvalidInputError("ExplicitOrbit needs a nonempty partition")


@dataclass(frozen=True)
class Eisenstein:
    """Representation induced from the parabolic with the given block sizes.

    blocks must be weakly decreasing positive integers, at least two of
    them, and constituents[i] must be a descriptor of rank blocks[i].
    Nesting (an Eisenstein constituent) is allowed.
    """

    blocks: tuple[int, ...]
    constituents: tuple["RepDescriptor", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if len(self.blocks) < 2:
            raise InvalidInputError(
                f"Eisenstein needs at least 2 blocks, got {list(self.blocks)}"
            )
        if any(b < 1 for b in self.blocks):
            raise InvalidInputError(f"blocks must be positive, got {list(self.blocks)}")
        for i in range(len(self.blocks) - 1):
            if self.blocks[i] < self.blocks[i + 1]:
                raise InvalidInputError(
                    f"blocks must be weakly decreasing, got {list(self.blocks)}"
                )
        if len(self.constituents) != len(self.blocks):
            raise InvalidInputError(
                f"{len(self.blocks)} blocks but {len(self.constituents)} constituents"
            )
        for b, c in zip(self.blocks, self.constituents):
            r = rank(c)
            if r != b:
                raise InvalidInputError(
                    f"constituent of rank {r} attached to block of size {b}"
                )


RepDescriptor = Union[Generic, Speh, TrivialConstituent, ExplicitOrbit, Eisenstein]


def rank(rep: RepDescriptor) -> int:
    """The n of the GL_n the descriptor lives on."""
    if isinstance(rep, Generic):
        return rep.n
    if isinstance(rep, Speh):
        return rep.p * rep.q
    if isinstance(rep, TrivialConstituent):
        return rep.n
    if isinstance(rep, ExplicitOrbit):
        return rep.orbit.n
    if isinstance(rep, Eisenstein):
        return sum(rep.blocks)
    raise InvalidInputError(f"not a representation descriptor: {rep!r}")


def attached_orbit(rep: RepDescriptor) -> Partition:
    """The unipotent orbit attached to the descriptor.

    For induced data this is the componentwise sum of the constituents'
    orbits (the induced-orbit closure), computed recursively.
    """
    if isinstance(rep, Generic):
        return Partition((rep.n,))
    if isinstance(rep, Speh):
        return Partition((rep.p,) * rep.q)
    if isinstance(rep, TrivialConstituent):
        return Partition((1,) * rep.n)
    if isinstance(rep, ExplicitOrbit):
        return rep.orbit
    if isinstance(rep, Eisenstein):
        total = Partition()
        for c in rep.constituents:
            total = total + attached_orbit(c)
        return total
    raise InvalidInputError(f"not a representation descriptor: {rep!r}")


def dim_rep(rep: RepDescriptor) -> int:
    """Gelfand–Kirillov dimension: half the attached orbit's dimension.

    For Eisenstein descriptors the value is computed twice — from the
    attached orbit, and as sum of constituent dimensions plus the pairwise
    block products — and the two routes are asserted equal.
    """
    d = attached_orbit(rep).rep_dim()
    if isinstance(rep, Eisenstein):
        alt = sum(dim_rep(c) for c in rep.constituents)
        m = rep.blocks
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                alt += m[i] * m[j]
        assert alt == d, f"induced-dimension routes disagree: {alt} vs {d} for {rep!r}"
    return d


def is_speh_type(rep: RepDescriptor) -> bool:
    """True when the attached orbit is a rectangle (all parts equal).

    Covers Generic (q = 1) and any induced data whose orbit collapses to a
    rectangle, on purpose: only the orbit shape matters downstream.
    """
    return attached_orbit(rep).rectangle() is not None


def top_trivial_block(rep: RepDescriptor) -> int | None:
    """Size of the leading block if rep is Eisenstein with a one-dimensional
    leading constituent (attached orbit (1^m)); None otherwise."""
    return trivial_block_at(rep, 1)


def trivial_block_at(rep: RepDescriptor, j: int) -> int | None:
    """Size of block j (1-indexed) if rep is Eisenstein and its j-th
    constituent is one-dimensional; None otherwise.

    Triviality is detected through the constituent's attached orbit, so
    Speh(1, m) and ExplicitOrbit((1^m)) count alongside TrivialConstituent.
    """
    if not isinstance(rep, Eisenstein):
        return None
    if j < 1 or j > len(rep.blocks):
        raise InvalidInputError(
            f"block index {j} out of range for {len(rep.blocks)} blocks"
        )
    if attached_orbit(rep.constituents[j - 1]).is_trivial_orbit():
        return rep.blocks[j - 1]
    return None


def minimal_eisenstein(n: int) -> Eisenstein:
    """The (n-1, 1) induced representation with both constituents trivial.

    Its orbit is (2, 1^(n-2)), the minimal nonzero orbit, of dimension
    2(n-1); its representation dimension n-1 is the smallest nonzero value
    on GL_n.
    """
    if n < 2:
        raise InvalidInputError(f"minimal_eisenstein needs n >= 2, got {n}")
    return Eisenstein(
        blocks=(n - 1, 1),
        constituents=(TrivialConstituent(n - 1), TrivialConstituent(1)),
    )


@dataclass(frozen=True)
class IntegralSpec:
    """A global integral's data: the common rank n and the representations.

    Every representation must have rank n, and none may be one-dimensional
    (attached orbit (1^n)) — those never enter the integrals this package
    books dimensions for.
    """

    n: int
    representations: tuple[RepDescriptor, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "representations", tuple(self.representations))
        if self.n < 1:
            raise InvalidInputError(f"IntegralSpec needs n >= 1, got {self.n}")
        if not self.representations:
            raise InvalidInputError("IntegralSpec needs at least one representation")
        for i, rep in enumerate(self.representations):
            r = rank(rep)
            if r != self.n:
                raise InvalidInputError(
                    f"representation {i} has rank {r}, expected {self.n}"
                )
            if attached_orbit(rep).is_trivial_orbit():
                raise InvalidInputError(
                    f"representation {i} is one-dimensional (orbit (1^{self.n})); "
                    "one-dimensional representations are excluded at top level"
                )

    @property
    def l(self) -> int:
        """Number of representations."""
        return len(self.representations)


# -- JSON wire format ----------------------------------------------------------
#
#   {"kind": "generic"}                              (rank from context, or "n")
#   {"kind": "speh", "p": 2, "q": 3}
#   {"kind": "trivial"}                              (rank from context, or "n")
#   {"kind": "orbit", "parts": [3, 1, 1]}
#   {"kind": "eisenstein", "blocks": [5, 1], "constituents": [ ... ]}
#
# and a spec is {"n": 6, "representations": [ ... ]}.


def rep_from_json(obj: object, expected_rank: int | None = None) -> RepDescriptor:
    """Build a descriptor from wire-format JSON.

    expected_rank supplies the rank for kinds that do not carry one
    ("generic", "trivial" without an explicit "n"); when a rank is both
    supplied and derivable they must agree.
    """
    if not isinstance(obj, dict):
        raise InvalidInputError(f"representation must be a JSON object, got {obj!r}")
    kind = obj.get("kind")
    if kind in ("generic", "trivial"):
        n = obj.get("n", expected_rank)
        if n is None:
            raise InvalidInputError(f"kind {kind!r} needs an explicit \"n\" here")
        if not isinstance(n, int) or n < 1:
            raise InvalidInputError(f"bad rank {n!r} for kind {kind!r}")
        rep: RepDescriptor = Generic(n) if kind == "generic" else TrivialConstituent(n)
    elif kind == "speh":
        p, q = obj.get("p"), obj.get("q")
        if not isinstance(p, int) or not isinstance(q, int):
            raise InvalidInputError(f"speh needs integer \"p\" and \"q\", got {obj!r}")
        rep = Speh(p, q)
    elif kind == "orbit":
        parts = obj.get("parts")
        if not isinstance(parts, list):
            raise InvalidInputError(f"orbit needs a \"parts\" list, got {obj!r}")
        rep = ExplicitOrbit(Partition(parts))
    elif kind == "eisenstein":
        blocks = obj.get("blocks")
        constituents = obj.get("constituents")
        if not isinstance(blocks, list) or not isinstance(constituents, list):
            raise InvalidInputError(
                f"eisenstein needs \"blocks\" and \"constituents\" lists, got {obj!r}"
            )
        if len(blocks) != len(constituents):
            raise InvalidInputError(
                f"{len(blocks)} blocks but {len(constituents)} constituents"
            )
        reps = tuple(
            rep_from_json(c, expected_rank=b) for b, c in zip(blocks, constituents)
        )
        rep = Eisenstein(blocks=tuple(blocks), constituents=reps)
    else:
        raise InvalidInputError(f"unknown representation kind {kind!r}")
    if expected_rank is not None and rank(rep) != expected_rank:
        raise InvalidInputError(
            f"representation has rank {rank(rep)}, expected {expected_rank}: {obj!r}"
        )
    return rep


def rep_to_json(rep: RepDescriptor) -> dict:
    """Wire-format JSON for a descriptor.  Inverse of rep_from_json."""
    if isinstance(rep, Generic):
        return {"kind": "generic", "n": rep.n}
    if isinstance(rep, Speh):
        return {"kind": "speh", "p": rep.p, "q": rep.q}
    if isinstance(rep, TrivialConstituent):
        return {"kind": "trivial", "n": rep.n}
    if isinstance(rep, ExplicitOrbit):
        return {"kind": "orbit", "parts": list(rep.orbit.parts)}
    if isinstance(rep, Eisenstein):
        return {
            "kind": "eisenstein",
            "blocks": list(rep.blocks),
            "constituents": [rep_to_json(c) for c in rep.constituents],
        }
    raise InvalidInputError(f"not a representation descriptor: {rep!r}")


def spec_from_json(obj: object) -> IntegralSpec:
    """Build an IntegralSpec from {"n": ..., "representations": [...]}."""
    if not isinstance(obj, dict):
        raise InvalidInputError(f"integral spec must be a JSON object, got {obj!r}")
    n = obj.get("n")
    reps = obj.get("representations")
    if not isinstance(n, int):
        raise InvalidInputError(f"integral spec needs an integer \"n\", got {obj!r}")
    if not isinstance(reps, list):
        raise InvalidInputError("integral spec needs a \"representations\" list")
    return IntegralSpec(
        n=n, representations=tuple(rep_from_json(r, expected_rank=n) for r in reps)
    )


def spec_to_json(spec: IntegralSpec) -> dict:
    return {
        "n": spec.n,
        "representations": [rep_to_json(r) for r in spec.representations],
    }
