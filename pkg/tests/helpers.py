"""Shared fixtures builders and independent oracles.

The oracles recompute everything from frozenset-of-ints first principles
(itertools over member lists, no bitmasks), so they exercise none of the
code paths they are used to check.
"""

from fractions import Fraction
from itertools import combinations

from millrank import CoalitionalRanking, Universe, validate_ranking


def rk(shorthand: str, n: int = 3) -> CoalitionalRanking:
    """Build a ranking from digit shorthand, e.g. "123 12 13 / rest".

    Classes are separated by "/", coalitions are digit strings over the
    default universe names "1".."n", and "rest" collects every coalition
    not yet placed into the current class. Only usable for n <= 9.
    """
    universe = Universe(n)
    used = set()
    classes = []
    for part in shorthand.split("/"):
        cls = []
        for token in part.split():
            if token == "rest":
                cls.extend(m for m in range(1, universe.full_mask + 1) if m not in used)
            else:
                cls.append(sum(1 << (int(ch) - 1) for ch in token))
        classes.append(cls)
        used.update(cls)
    return validate_ranking(classes, universe)


def sel(digits: str) -> tuple[int, ...]:
    """Ascending id tuple for a digit string, e.g. sel("13") == (0, 2)."""
    return tuple(sorted(int(ch) - 1 for ch in digits))


def cmask(digits: str) -> int:
    """Coalition mask for a digit string, e.g. cmask("13") == 0b101."""
    return sum(1 << (int(ch) - 1) for ch in digits)


def as_sets(ranking: CoalitionalRanking):
    """Ranking classes as a list of sets of frozensets of ids."""
    n = ranking.universe.n
    return [
        {frozenset(i for i in range(n) if mask >> i & 1) for mask in cls}
        for cls in ranking.classes
    ]


def _index(classes, coalition):
    for j, cls in enumerate(classes):
        if coalition in cls:
            return j
    raise KeyError(coalition)


def oracle_theta(ranking, x):
    return tuple(sum(1 for s in cls if x in s) for cls in as_sets(ranking))


def oracle_banzhaf(ranking, x):
    classes = as_sets(ranking)
    n = ranking.universe.n
    others = [i for i in range(n) if i != x]
    up = down = 0
    for k in range(1, len(others) + 1):
        for chosen in combinations(others, k):
            s = frozenset(chosen)
            a = _index(classes, s | {x})
            b = _index(classes, s)
            if a < b:
                up += 1
            elif a > b:
                down += 1
    return up, down, up - down


def oracle_concomitant(ranking):
    classes = as_sets(ranking)
    n = ranking.universe.n
    out = []
    for x in range(n):
        others = [i for i in range(n) if i != x]
        improves = True
        for k in range(1, len(others) + 1):
            for chosen in combinations(others, k):
                s = frozenset(chosen)
                if not _index(classes, s | {x}) < _index(classes, s):
                    improves = False
        if improves:
            out.append(x)
    return tuple(out)


def _oracle_argmax(scores):
    best = max(scores.values())
    return tuple(sorted(x for x, v in scores.items() if v == best))


def oracle_plurality(ranking):
    classes = as_sets(ranking)
    n = ranking.universe.n
    return _oracle_argmax({x: sum(1 for s in classes[0] if x in s) for x in range(n)})


def oracle_les(ranking):
    n = ranking.universe.n
    vectors = {x: oracle_theta(ranking, x) for x in range(n)}
    return _oracle_argmax(vectors)


def oracle_obi(ranking):
    n = ranking.universe.n
    return _oracle_argmax({x: oracle_banzhaf(ranking, x)[2] for x in range(n)})


def oracle_split_plurality(ranking):
    classes = as_sets(ranking)
    n = ranking.universe.n
    scores = {
        x: sum((Fraction(1, len(s)) for s in classes[0] if x in s), Fraction(0))
        for x in range(n)
    }
    return _oracle_argmax(scores)


def oracle_f_star(ranking):
    classes = as_sets(ranking)
    n = ranking.universe.n
    inter = frozenset(range(n))
    for s in classes[0]:
        inter &= s
    if inter:
        return tuple(sorted(inter))
    if (len(classes) * len(classes[0])) % 2 == 0:
        return oracle_plurality(ranking)
    return tuple(range(n))


def oracle_weak_order_count(m):
    """Weak orders on m elements via Stirling numbers, not the recurrence."""
    from math import factorial

    stirling = [[0] * (m + 1) for _ in range(m + 1)]
    stirling[0][0] = 1
    for i in range(1, m + 1):
        for k in range(1, i + 1):
            stirling[i][k] = k * stirling[i - 1][k] + stirling[i - 1][k - 1]
    return sum(stirling[m][k] * factorial(k) for k in range(m + 1))


def all_placements(ranking, subject):
    """Every ranking that agrees with the input away from the subject.

    Reinserts the subject anywhere: merged into each remaining class or
    as a singleton in each gap, upward moves included. Any ranking not in
    this family orders the other coalitions differently, so together
    with it this family is exhaustive for deterioration recognition.
    """
    stripped = [
        [m for m in cls if m != subject] for cls in ranking.classes
    ]
    stripped = [cls for cls in stripped if cls]
    out = []
    for k in range(len(stripped)):
        merged = [list(c) for c in stripped]
        merged[k].append(subject)
        merged[k].sort()
        out.append(validate_ranking(merged, ranking.universe))
    for gap in range(len(stripped) + 1):
        inserted = [list(c) for c in stripped]
        inserted.insert(gap, [subject])
        out.append(validate_ranking(inserted, ranking.universe))
    return out
