"""Ranking transformations: balanced slides and single-coalition deteriorations.

Class indices in this module are 0-based positions into
``ranking.classes`` (0 is the best class).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CoalitionalRanking
from .errors import InvalidMoveError, OutOfUniverseError, UniverseMismatchError


@dataclass(frozen=True, slots=True)
class SlideMove:
    """Move a nonempty proper subset of one class into another class.

    ``gamma`` holds coalition masks, sorted ascending. The move keeps the
    number of classes: the source keeps at least one coalition and the
    destination only grows.
    """

    k1: int
    k2: int
    gamma: tuple[int, ...]


def apply_slide(ranking: CoalitionalRanking, move: SlideMove) -> CoalitionalRanking:
    """Apply a slide move, preserving every class other than k1 and k2."""
    classes = ranking.classes
    l = len(classes)
    if not (0 <= move.k1 < l and 0 <= move.k2 < l):
        raise InvalidMoveError(f"class index out of range for {l} classes")
    if move.k1 == move.k2:
        raise InvalidMoveError("source and destination class must differ")
    gamma = set(move.gamma)
    if not gamma:
        raise InvalidMoveError("gamma must be nonempty")
    source = set(classes[move.k1])
    if not gamma < source:
        raise InvalidMoveError("gamma must be a proper subset of the source class")
    new_classes = list(classes)
    new_classes[move.k1] = tuple(m for m in classes[move.k1] if m not in gamma)
    new_classes[move.k2] = tuple(sorted(classes[move.k2] + move.gamma))
    return CoalitionalRanking._trusted(ranking.universe, tuple(new_classes))


def enumerate_slides(ranking: CoalitionalRanking, x: int, y: int):
    """Yield every slide balanced between x and y, with its result.

    A slide is balanced when gamma holds as many coalitions containing x
    as containing y (possibly zero of each). Yields ``(move, ranking2)``
    pairs ordered by source class, then destination class, then gamma as
    a bit pattern over the mask-sorted source class. Empty gamma and
    k1 == k2 are excluded as no-ops.
    """
    n = ranking.universe.n
    if not (0 <= x < n and 0 <= y < n):
        raise OutOfUniverseError(f"individual ids {x}, {y} must lie in 0..{n - 1}")
    if x == y:
        raise ValueError("x and y must be distinct individuals")
    bx, by = 1 << x, 1 << y
    classes = ranking.classes
    l = len(classes)
    for k1 in range(l):
        cls = classes[k1]
        m = len(cls)
        if m < 2:
            continue
        balanced = []
        for bits in range(1, (1 << m) - 1):
            cx = cy = 0
            rest = bits
            while rest:
                low = rest & -rest
                mask = cls[low.bit_length() - 1]
                if mask & bx:
                    cx += 1
                if mask & by:
                    cy += 1
                rest ^= low
            if cx == cy:
                balanced.append(tuple(cls[i] for i in range(m) if bits >> i & 1))
        if not balanced:
            continue
        for k2 in range(l):
            if k2 == k1:
                continue
            for gamma in balanced:
                move = SlideMove(k1, k2, gamma)
                yield move, apply_slide(ranking, move)


@dataclass(frozen=True, slots=True)
class DeteriorationSpec:
    """Where a single coalition is moved, weakly downward.

    ``kind`` is one of ``"stay"``, ``"join"`` (merge into the class at
    original index k) or ``"below"`` (create a singleton class directly
    below the class at original index k). Indices refer to the class list
    of the ranking being transformed.
    """

    subject: int
    kind: str
    k: int


def apply_deterioration(ranking: CoalitionalRanking, spec: DeteriorationSpec) -> CoalitionalRanking:
    """Rebuild a ranking with the subject coalition placed per the spec."""
    j = ranking.index_of(spec.subject)
    classes = [list(c) for c in ranking.classes]
    classes[j].remove(spec.subject)
    if spec.kind == "stay":
        classes[j].append(spec.subject)
        classes[j].sort()
    elif spec.kind == "join":
        classes[spec.k].append(spec.subject)
        classes[spec.k].sort()
    elif spec.kind == "below":
        classes.insert(spec.k + 1, [spec.subject])
    else:
        raise ValueError(f"unknown placement kind {spec.kind!r}")
    return CoalitionalRanking._trusted(
        ranking.universe, tuple(tuple(c) for c in classes if c)
    )


def enumerate_deterioration_specs(ranking: CoalitionalRanking, subject: int):
    """Yield every distinct weakly-downward placement of one coalition.

    The identity placement is included: leaving the subject where it is
    satisfies the deterioration conditions. For a subject sharing its
    class, the other placements merge it into any strictly lower class or
    insert it as a singleton directly below any class from its own down.
    For a subject alone in its class, placements below its current
    position are offset by the disappearance of its old class.
    """
    j = ranking.index_of(subject)
    l = len(ranking.classes)
    alone = len(ranking.classes[j]) == 1
    yield DeteriorationSpec(subject, "stay", j)
    for k in range(j + 1, l):
        yield DeteriorationSpec(subject, "join", k)
    start = j + 1 if alone else j
    for k in range(start, l):
        yield DeteriorationSpec(subject, "below", k)


def enumerate_deteriorations(ranking: CoalitionalRanking, subject: int):
    """Yield every ranking reachable by moving one coalition weakly down.

    The stream is duplicate-free, starts with the unchanged ranking, and
    every yield satisfies :func:`is_deterioration` against the input.
    """
    for spec in enumerate_deterioration_specs(ranking, subject):
        yield apply_deterioration(ranking, spec)


def is_deterioration(
    ranking: CoalitionalRanking, ranking2: CoalitionalRanking, subject: int
) -> bool:
    """Decide whether ranking2 degrades only the subject coalition.

    True when the two rankings order all other coalitions identically and
    the subject lost no strict superior and gained no former equal above
    it: coalitions tied with it may only stay tied or move strictly above,
    and coalitions strictly above must remain strictly above.
    """
    if ranking.universe != ranking2.universe:
        raise UniverseMismatchError("rankings must share a universe")
    j = ranking.index_of(subject)
    if _restricted(ranking, subject) != _restricted(ranking2, subject):
        return False
    j2 = ranking2.index_of(subject)
    class_of, class_of2 = ranking.class_of, ranking2.class_of
    for mask in range(1, ranking.universe.full_mask + 1):
        if mask == subject:
            continue
        k = class_of[mask]
        if k == j and not class_of2[mask] <= j2:
            return False
        if k < j and not class_of2[mask] < j2:
            return False
    return True


def _restricted(ranking: CoalitionalRanking, subject: int):
    return tuple(
        tuple(m for m in cls if m != subject)
        for cls in ranking.classes
        if cls != (subject,)
    )
