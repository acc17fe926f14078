"""Fundamental-group descriptors of permutation quotients of cartesian
powers and of unordered fat diagonals.

The results these spaces admit are product shapes built from two symbols:
Pi1(X), the fundamental group of the base, and H1(X), its abelianization.
A GroupExpression records the two exponents rather than a presentation;
when the base has abelian fundamental group the Pi1 factors are normalized
away into H1 factors, and the expression then resolves to a concrete
finitely generated abelian group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedSpaceError
from .permgroup import PermutationGroupModel
from .spaces import AbelianDescriptor, SpaceModel


@dataclass(frozen=True)
class OrbitStructure:
    """Orbit sizes of a permutation group: fixed points counted separately,
    the sizes >= 2 listed in increasing order."""

    trivial_orbits: int
    nontrivial_sizes: tuple[int, ...]

    def __post_init__(self):
        if self.trivial_orbits < 0:
            raise ValueError("negative count of fixed points")
        if any(k < 2 for k in self.nontrivial_sizes):
            raise ValueError("nontrivial orbits have size >= 2")
        if tuple(sorted(self.nontrivial_sizes)) != self.nontrivial_sizes:
            raise ValueError("orbit sizes must be sorted")

    @property
    def degree(self) -> int:
        return self.trivial_orbits + sum(self.nontrivial_sizes)

    @property
    def num_nontrivial(self) -> int:
        return len(self.nontrivial_sizes)


def orbit_structure(group: PermutationGroupModel) -> OrbitStructure:
    """Split the orbits of the group into fixed points and larger orbits.

    >>> from .permgroup import PermutationGroupModel
    >>> orbit_structure(PermutationGroupModel(4, ["(1 2)"]))
    OrbitStructure(trivial_orbits=2, nontrivial_sizes=(2,))
    """
    sizes = sorted(len(o) for o in group.orbits())
    trivial = sum(1 for s in sizes if s == 1)
    return OrbitStructure(trivial, tuple(s for s in sizes if s >= 2))


@dataclass(frozen=True)
class GroupExpression:
    """Formal product Pi1(X)^a x H1(X)^b, with what is known about Pi1(X)
    carried along so the expression can resolve itself when possible.

    qualifier "exact" means the expression IS the group; "abelian-only"
    means only abelianness is being asserted.
    """

    pi1_exponent: int
    h1_exponent: int
    pi1_kind: str
    h1: AbelianDescriptor
    pi1_label: str | None = None
    qualifier: str = "exact"

    def __post_init__(self):
        if self.pi1_exponent < 0 or self.h1_exponent < 0:
            raise ValueError("negative exponent")
        if self.qualifier not in ("exact", "abelian-only"):
            raise ValueError(f"bad qualifier {self.qualifier!r}")
        if self.pi1_kind in ("trivial", "abelian") and self.pi1_exponent:
            raise ValueError("resolvable Pi1 factors must be normalized away")

    @classmethod
    def for_space(
        cls,
        space: SpaceModel,
        pi1_exponent: int,
        h1_exponent: int,
        qualifier: str = "exact",
    ) -> "GroupExpression":
        """Build the expression, folding Pi1 factors into H1 factors when
        the fundamental group of the space is (known to be) abelian."""
        if space.pi1_kind == "trivial":
            # simply connected: H1 is trivial too, nothing survives
            pi1_exponent = 0
            h1_exponent = 0
        elif space.pi1_kind == "abelian":
            h1_exponent += pi1_exponent
            pi1_exponent = 0
        return cls(
            pi1_exponent=pi1_exponent,
            h1_exponent=h1_exponent,
            pi1_kind=space.pi1_kind,
            h1=space.h1,
            pi1_label=space.pi1_label,
            qualifier=qualifier,
        )

    def is_concrete(self) -> bool:
        """Whether the expression resolves to a known abelian group."""
        return self.pi1_exponent == 0

    def abelian_descriptor(self) -> AbelianDescriptor:
        """The concrete group, when is_concrete()."""
        if not self.is_concrete():
            raise UnsupportedSpaceError(
                f"expression {self.display()} has opaque Pi1 factors"
            )
        return self.h1.power(self.h1_exponent)

    def display(self) -> str:
        parts = []
        if self.pi1_exponent == 1:
            parts.append("Pi1(X)")
        elif self.pi1_exponent > 1:
            parts.append(f"Pi1(X)^{self.pi1_exponent}")
        if self.h1_exponent == 1:
            parts.append("H1(X)")
        elif self.h1_exponent > 1:
            parts.append(f"H1(X)^{self.h1_exponent}")
        return " x ".join(parts) if parts else "1"


def _require_connected(space: SpaceModel) -> None:
    if not space.connected:
        raise UnsupportedSpaceError(
            f"fundamental-group descriptors need a connected space, got {space.label!r}"
        )


def pi1_gamma_product(space: SpaceModel, group: PermutationGroupModel) -> GroupExpression:
    """Fundamental group of the quotient of X^n by a permutation group:
    one Pi1(X) factor per fixed point of the action, one H1(X) factor per
    orbit of size >= 2.

    >>> from .spaces import preset
    >>> from .permgroup import PermutationGroupModel
    >>> pi1_gamma_product(preset("wedge_circles:2"),
    ...                   PermutationGroupModel(4, ["(1 2)"])).display()
    'Pi1(X)^2 x H1(X)'
    """
    _require_connected(space)
    orbits = orbit_structure(group)
    return GroupExpression.for_space(
        space,
        pi1_exponent=orbits.trivial_orbits,
        h1_exponent=orbits.num_nontrivial,
    )


def pi1_bd(space: SpaceModel, n: int, d: int) -> GroupExpression:
    """Fundamental group of the unordered fat diagonal.

    For 2d <= n the space is simply connected relative to the base:
    pi_1 = H1(X).  For d beyond n/2 it splits as X x sp(X, n-d), giving
    Pi1(X) x H1(X) when n - d >= 2, Pi1(X)^2 when n - d = 1, and the thin
    diagonal Pi1(X) when d = n.

    >>> from .spaces import preset
    >>> pi1_bd(preset("circle"), 4, 2).display()
    'H1(X)'
    >>> str(pi1_bd(preset("circle"), 4, 2).abelian_descriptor())
    'Z'
    """
    _require_connected(space)
    if not 1 <= d <= n:
        raise ValueError(f"needs 1 <= d <= n, got d={d}, n={n}")
    if 2 * d <= n:
        return GroupExpression.for_space(space, pi1_exponent=0, h1_exponent=1)
    if d == n:
        return GroupExpression.for_space(space, pi1_exponent=1, h1_exponent=0)
    if n - d == 1:
        return GroupExpression.for_space(space, pi1_exponent=2, h1_exponent=0)
    return GroupExpression.for_space(space, pi1_exponent=1, h1_exponent=1)


def pi1_bgamma_abelian(group: PermutationGroupModel, n: int, d: int) -> bool:
    """Whether the quotient of the ordered fat diagonal by the group is
    guaranteed to have abelian fundamental group: the group must act
    d-transitively and d must be at most n/2.

    False means "no claim", not "non-abelian".

    >>> from .permgroup import cyclic_group
    >>> pi1_bgamma_abelian(cyclic_group(3), 3, 1)
    True
    """
    if not 1 <= d <= n:
        raise ValueError(f"needs 1 <= d <= n, got d={d}, n={n}")
    if group.degree != n:
        raise ValueError(f"group degree {group.degree} != n = {n}")
    if 2 * d > n:
        return False
    return group.is_d_transitive(d)
