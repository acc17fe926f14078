"""Equality-pattern stratification of a cartesian power under a permutation
group: pattern stabilizers, stratification depth, and subgroup chain length.

A set partition P of the n coordinates is an equality pattern; its
stabilizer in G consists of the elements mapping every block to itself.
Coarsening patterns only grows the stabilizer, and the depth of G is the
longest chain of strict coarsenings along which the stabilizer strictly
grows at every step.  Over a manifold base of positive dimension every
pattern is realized by actual points and this combinatorial depth is the
depth of the orbit-type stratification of the quotient; that geometric
reading is an assumption of the caller, not checked here.

Since stabilizers along a chain are nested, two of them are conjugate in G
exactly when they are equal, so strict growth of the conjugacy class is
tested by comparing orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import SetPartition, set_partitions
from .errors import check_guard
from .permgroup import Permutation, PermutationGroupModel

MAX_DEPTH_DEGREE = 9
MAX_SUBGROUP_ORDER = 120


def stabilizer_of_pattern(
    group: PermutationGroupModel, pattern: SetPartition
) -> frozenset[Permutation]:
    """Elements of the group fixing an equality pattern: g with i and g(i)
    always in the same block.

    >>> from .permgroup import symmetric_group
    >>> from .combinatorics import SetPartition
    >>> pat = SetPartition.from_blocks([{0, 1}, {2}])
    >>> len(stabilizer_of_pattern(symmetric_group(3), pat))
    2
    """
    if pattern.n != group.degree:
        raise ValueError(f"pattern on {pattern.n} points, group degree {group.degree}")
    labels = pattern.as_labels()
    return frozenset(
        g for g in group.elements()
        if all(labels[g.images[i]] == labels[i] for i in range(group.degree))
    )


def _stabilizer_sizes(group: PermutationGroupModel) -> dict[tuple[int, ...], int]:
    """Map each pattern (as a label vector) to the order of its stabilizer."""
    n = group.degree
    elements = group.elements()
    out: dict[tuple[int, ...], int] = {}
    for pattern in set_partitions(n):
        labels = pattern.as_labels()
        size = sum(
            1
            for g in elements
            if all(labels[g.images[i]] == labels[i] for i in range(n))
        )
        out[labels] = size
    return out


def _merge_labels(labels: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Canonical label vector after merging blocks a and b (a < b)."""
    remap: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab == b:
            lab = a
        if lab not in remap:
            remap[lab] = len(remap)
        out.append(remap[lab])
    return tuple(out)


def depth(group: PermutationGroupModel) -> int:
    """Longest chain of strict pattern coarsenings with strictly growing
    stabilizers.

    Dynamic program over the partition lattice: best(P) is the most strict
    stabilizer jumps on any coarsening path from P up to the one-block
    pattern, and the answer is best at the discrete pattern, where the
    stabilizer is the kernel of the action.

    >>> from .permgroup import symmetric_group, trivial_group
    >>> depth(symmetric_group(4))
    3
    >>> depth(trivial_group(5))
    0
    """
    n = group.degree
    check_guard(n, MAX_DEPTH_DEGREE, "stratification depth")
    if n == 0:
        return 0
    stab_size = _stabilizer_sizes(group)
    by_blocks: dict[int, list[tuple[int, ...]]] = {}
    for labels in stab_size:
        b = max(labels) + 1
        by_blocks.setdefault(b, []).append(labels)

    best: dict[tuple[int, ...], int] = {}
    for b in range(1, n + 1):
        for labels in by_blocks.get(b, ()):
            if b == 1:
                best[labels] = 0
                continue
            here = stab_size[labels]
            score = 0
            for i in range(b):
                for j in range(i + 1, b):
                    merged = _merge_labels(labels, i, j)
                    jump = 1 if stab_size[merged] > here else 0
                    score = max(score, best[merged] + jump)
            best[labels] = score
    discrete = tuple(range(n))
    return best[discrete]


@dataclass(frozen=True)
class StabilizerClassPoset:
    """Conjugacy classes (in the group) of realized pattern stabilizers,
    with the coarsening-induced order between them.

    representatives holds one subgroup per class, sorted by order then by
    element list; leq holds index pairs (i, j) meaning class i arises at a
    pattern refining one where class j arises, i.e. i <= j.
    """

    representatives: tuple[frozenset[Permutation], ...]
    leq: frozenset[tuple[int, int]]


def stabilizer_class_poset(group: PermutationGroupModel) -> StabilizerClassPoset:
    """Conjugacy classes of pattern stabilizers and their coarsening order.

    Guarded like depth; intended for small degrees.
    """
    n = group.degree
    check_guard(n, MAX_DEPTH_DEGREE, "stabilizer class poset")
    elements = group.elements()

    def conjugacy_class(sub: frozenset[Permutation]) -> frozenset[frozenset[Permutation]]:
        return frozenset(
            frozenset(g * h * g.inverse() for h in sub) for g in elements
        )

    patterns = list(set_partitions(n))
    stabs = {p.as_labels(): stabilizer_of_pattern(group, p) for p in patterns}

    classes: list[frozenset[frozenset[Permutation]]] = []
    class_of: dict[tuple[int, ...], int] = {}
    for labels, sub in stabs.items():
        cls = conjugacy_class(sub)
        try:
            idx = classes.index(cls)
        except ValueError:
            idx = len(classes)
            classes.append(cls)
        class_of[labels] = idx

    relations: set[tuple[int, int]] = {(i, i) for i in range(len(classes))}
    for labels in stabs:
        b = max(labels) + 1
        for i in range(b):
            for j in range(i + 1, b):
                merged = _merge_labels(labels, i, j)
                relations.add((class_of[labels], class_of[merged]))
    # transitive closure
    changed = True
    while changed:
        changed = False
        for (a, b1) in list(relations):
            for (c, d) in list(relations):
                if b1 == c and (a, d) not in relations:
                    relations.add((a, d))
                    changed = True

    def rep_key(cls):
        rep = min(sorted(h.images for h in sub) for sub in cls)
        return (len(rep), rep)

    order = sorted(range(len(classes)), key=lambda i: rep_key(classes[i]))
    rank = {old: new for new, old in enumerate(order)}
    reps = []
    for i in order:
        chosen = min(classes[i], key=lambda sub: sorted(h.images for h in sub))
        reps.append(chosen)
    return StabilizerClassPoset(
        representatives=tuple(reps),
        leq=frozenset((rank[a], rank[b]) for a, b in relations),
    )


def length_sn(n: int) -> int:
    """Longest subgroup chain length in the full symmetric group on n
    points: floor((3n-1)/2) minus the number of ones in the binary
    expansion of n.

    >>> [length_sn(n) for n in range(1, 7)]
    [0, 1, 2, 4, 5, 6]
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (3 * n - 1) // 2 - bin(n).count("1")


def _closure(subgroup: frozenset[Permutation], extra: Permutation) -> frozenset[Permutation]:
    """Subgroup generated by a known subgroup and one more element."""
    elems = set(subgroup)
    frontier = [extra]
    while frontier:
        x = frontier.pop()
        if x in elems:
            continue
        elems.add(x)
        for y in list(elems):
            for p in (x * y, y * x):
                if p not in elems:
                    frontier.append(p)
    return frozenset(elems)


def all_subgroups(group: PermutationGroupModel) -> set[frozenset[Permutation]]:
    """Every subgroup, as a frozenset of elements.

    Breadth-first over one-generator extensions: each known subgroup is
    extended by one representative of each of its cosets.  Guarded at
    group order 120.
    """
    check_guard(group.order(), MAX_SUBGROUP_ORDER, "subgroup enumeration")
    elements = group.sorted_elements()
    trivial = frozenset([Permutation.identity(group.degree)])
    found: set[frozenset[Permutation]] = {trivial}
    queue = [trivial]
    while queue:
        sub = queue.pop()
        covered = set(sub)
        for g in elements:
            if g in covered:
                continue
            covered.update(h * g for h in sub)
            bigger = _closure(sub, g)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    return found


def group_length(group: PermutationGroupModel) -> int:
    """Length of the longest strict chain of subgroups from the trivial
    group to the whole group.

    >>> from .permgroup import symmetric_group, cyclic_group
    >>> group_length(symmetric_group(3))
    2
    >>> group_length(cyclic_group(4))
    2
    """
    subgroups = sorted(all_subgroups(group), key=len)
    longest: dict[frozenset[Permutation], int] = {}
    for sub in subgroups:
        best = 0
        for smaller in subgroups:
            if len(smaller) >= len(sub):
                break
            if len(sub) % len(smaller) == 0 and smaller < sub:
                best = max(best, longest[smaller] + 1)
        longest[sub] = best
    return longest[frozenset(group.elements())]
