"""Set-valued selection rules over coalitional rankings.

Every rule maps a ranking to the nonempty, ascending tuple of ids of the
individuals it selects. No tie-breaking is ever applied; ties are part of
the output. All rules are pure and safe to call concurrently.
"""

from __future__ import annotations

from fractions import Fraction

from .core import CoalitionalRanking, _members_table, banzhaf, theta, top_intersection
from .errors import UnknownRuleError


def _argmax(scores) -> tuple[int, ...]:
    best = max(scores)
    return tuple(i for i, s in enumerate(scores) if s == best)


def _top_counts(ranking: CoalitionalRanking) -> list[int]:
    n = ranking.universe.n
    table = _members_table(n)
    counts = [0] * n
    for mask in ranking.classes[0]:
        for i in table[mask]:
            counts[i] += 1
    return counts


def plurality(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Select the individuals appearing in the most best-class coalitions."""
    return _argmax(_top_counts(ranking))


def les(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Lexicographic excellence: maximize the per-class appearance vector.

    Compares the whole vector of per-class counts, best class first, so
    ties under :func:`plurality` are broken by deeper classes. The result
    is always a subset of the plurality selection.
    """
    vectors = [theta(ranking, x) for x in range(ranking.universe.n)]
    return _argmax(vectors)


def obi(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Select maximizers of the improvement-minus-deterioration score."""
    return _argmax([banzhaf(ranking, x).score for x in range(ranking.universe.n)])


def split_plurality(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Plurality with each best-class coalition worth 1 split evenly.

    A best-class coalition S contributes 1/|S| to each of its members.
    Scores are exact rationals; float rounding would invent or destroy
    ties between sums such as 1/3 + 1/2 and 5/6.
    """
    n = ranking.universe.n
    table = _members_table(n)
    scores = [Fraction(0)] * n
    for mask in ranking.classes[0]:
        share = Fraction(1, mask.bit_count())
        for i in table[mask]:
            scores[i] += share
    return _argmax(scores)


def f_star(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Hybrid rule keyed to the best class.

    Returns the individuals common to every best-class coalition when
    there are any; otherwise falls back to :func:`plurality` when the
    product of the class count and the best-class size is even, and to
    the whole universe when it is odd.
    """
    inter = top_intersection(ranking)
    n = ranking.universe.n
    if inter:
        return _members_table(n)[inter]
    if (ranking.num_classes * len(ranking.classes[0])) % 2 == 0:
        return plurality(ranking)
    return tuple(range(n))


def const_x(ranking: CoalitionalRanking) -> tuple[int, ...]:
    """Select every individual, unconditionally."""
    return tuple(range(ranking.universe.n))


RULES = {
    "plurality": plurality,
    "les": les,
    "obi": obi,
    "split_plurality": split_plurality,
    "f_star": f_star,
    "const_x": const_x,
}


def lookup_rule(rule_id: str):
    """Resolve a rule identifier to its function.

    Raises UnknownRuleError for identifiers outside the registry.
    """
    try:
        return RULES[rule_id]
    except KeyError:
        known = ", ".join(sorted(RULES))
        raise UnknownRuleError(f"unknown rule {rule_id!r} (known: {known})") from None
