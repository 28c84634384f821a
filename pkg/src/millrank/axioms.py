"""Executable checkers for the selection axioms.

Each checker scans one ranking for every premise instance of its axiom,
evaluates the given rule wherever a premise fires, and reports one of
three statuses: ``inapplicable`` (no premise instance exists),
``satisfied`` (every instance met its forced conclusion) or ``violated``
(at least one did not, with the first failing instance recorded as a
replayable witness). ``premises_checked`` always counts every instance
found, so sweep statistics distinguish vacuous passes from real evidence.

Checkers are pure. A rule is any callable from rankings to ascending id
tuples, e.g. the entries of :data:`millrank.solutions.RULES`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CoalitionalRanking, concomitant_set, mask_members, top_intersection
from .errors import UnknownAxiomError
from .transforms import (
    SlideMove,
    apply_deterioration,
    apply_slide,
    enumerate_deterioration_specs,
)

INAPPLICABLE = "inapplicable"
SATISFIED = "satisfied"
VIOLATED = "violated"


@dataclass(frozen=True)
class Witness:
    """Replayable record of one axiom violation.

    ``premise`` holds the instance data (ids and masks, plus the
    transformed ranking for the two transformation axioms); ``expected``
    describes the forced conclusion and ``actual`` what the rule produced.
    Re-running the same checker on ``ranking`` reproduces the violation.
    """

    axiom: str
    ranking: CoalitionalRanking
    premise: dict
    expected: str
    actual: dict


@dataclass(frozen=True)
class Verdict:
    status: str
    premises_checked: int
    witness: Witness | None = field(default=None)


def _verdict(premises: int, witness: Witness | None) -> Verdict:
    if premises == 0:
        return Verdict(INAPPLICABLE, 0)
    if witness is not None:
        return Verdict(VIOLATED, premises, witness)
    return Verdict(SATISFIED, premises)


def _sel(ids) -> tuple[int, ...]:
    return tuple(ids)


def _spell(ranking, ids) -> str:
    names = ranking.universe.names
    return "{" + ",".join(names[i] for i in sorted(ids)) + "}"


def check_top_agreement(ranking, rule, strong: bool = False) -> Verdict:
    """Agreement read off the best class.

    Weak form: when exactly one individual lies in every best-class
    coalition, the rule must select precisely that individual. Strong
    form: whenever the best-class intersection is nonempty, the selection
    must equal it.
    """
    inter = top_intersection(ranking)
    n = ranking.universe.n
    applicable = inter != 0 if strong else inter.bit_count() == 1
    if not applicable:
        return Verdict(INAPPLICABLE, 0)
    forced = mask_members(inter, n)
    actual = rule(ranking)
    witness = None
    if set(actual) != set(forced):
        witness = Witness(
            axiom="STAG" if strong else "TAG",
            ranking=ranking,
            premise={"top_intersection": forced},
            expected=f"selection equals the best-class intersection {_spell(ranking, forced)}",
            actual={"selection": _sel(actual)},
        )
    return _verdict(1, witness)


def check_top_difference(ranking, rule) -> Verdict:
    """Difference read off the best class.

    When the best class consists of exactly the coalitions containing
    some individual x, the rule must select x alone. At most one such x
    can exist.
    """
    n = ranking.universe.n
    inter = top_intersection(ranking)
    half = 1 << (n - 1)
    premises = 0
    witness = None
    if len(ranking.classes[0]) == half and inter:
        for x in mask_members(inter, n):
            premises += 1
            actual = rule(ranking)
            if set(actual) != {x}:
                witness = Witness(
                    axiom="TDF",
                    ranking=ranking,
                    premise={"x": x},
                    expected=f"selection equals {_spell(ranking, (x,))}",
                    actual={"selection": _sel(actual)},
                )
                break
    return _verdict(premises, witness)


def check_top_joint(ranking, rule) -> Verdict:
    """Joint agreement and difference read off the best class.

    Premise: the best-class intersection is a single individual x, the
    coalitions below the best class have empty intersection, and none of
    them contains x. Conclusion: the rule selects x alone.
    """
    n = ranking.universe.n
    inter = top_intersection(ranking)
    if inter.bit_count() != 1:
        return Verdict(INAPPLICABLE, 0)
    below_inter = ranking.universe.full_mask
    below_union = 0
    for cls in ranking.classes[1:]:
        for mask in cls:
            below_inter &= mask
            below_union |= mask
    if len(ranking.classes) == 1:
        below_inter = ranking.universe.full_mask  # empty family: never empty
    if below_inter != 0 or below_union & inter:
        return Verdict(INAPPLICABLE, 0)
    x = inter.bit_length() - 1
    actual = rule(ranking)
    witness = None
    if set(actual) != {x}:
        witness = Witness(
            axiom="TJAD",
            ranking=ranking,
            premise={"x": x},
            expected=f"selection equals {_spell(ranking, (x,))}",
            actual={"selection": _sel(actual)},
        )
    return _verdict(1, witness)


def check_concomitant(ranking, rule) -> Verdict:
    """Concomitant variation.

    Every individual whose presence strictly improves each coalition
    avoiding them must be selected. Inapplicable when no individual has
    that property.
    """
    c = concomitant_set(ranking)
    if not c:
        return Verdict(INAPPLICABLE, 0)
    actual = rule(ranking)
    witness = None
    if not set(c) <= set(actual):
        witness = Witness(
            axiom="CV",
            ranking=ranking,
            premise={"concomitant": c},
            expected=f"selection contains every individual of {_spell(ranking, c)}",
            actual={"selection": _sel(actual)},
        )
    return _verdict(1, witness)


def _prefix_intersections(ranking):
    out = []
    inter = ranking.universe.full_mask
    for cls in ranking.classes:
        for mask in cls:
            inter &= mask
        out.append(inter)
    return out


def check_relative_agreement(ranking, rule, weak: bool = False) -> Verdict:
    """Agreement relative to a reference coalition.

    For every reference coalition s0 whose strict superiors have exactly
    one common individual x, the rule must select x alone (weak form:
    must at least include x). References with no strict superior never
    fire. Premises are scanned by class of s0, then by mask.
    """
    premises = 0
    witness = None
    prefix = _prefix_intersections(ranking)
    actual = None
    n = ranking.universe.n
    axiom = "WRAG" if weak else "RAG"
    for j in range(1, len(ranking.classes)):
        inter = prefix[j - 1]
        if inter.bit_count() != 1:
            continue
        x = inter.bit_length() - 1
        cls = ranking.classes[j]
        premises += len(cls)
        if witness is not None:
            continue
        if actual is None:
            actual = rule(ranking)
        ok = x in actual if weak else set(actual) == {x}
        if not ok:
            requirement = (
                f"selection contains {_spell(ranking, (x,))}"
                if weak
                else f"selection equals {_spell(ranking, (x,))}"
            )
            witness = Witness(
                axiom=axiom,
                ranking=ranking,
                premise={"s0": cls[0], "x": x},
                expected=requirement,
                actual={"selection": _sel(actual)},
            )
    return _verdict(premises, witness)


def _separation_bounds(ranking):
    """Per individual: worst class holding them, best class avoiding them."""
    n = ranking.universe.n
    worst_with = [-1] * n
    best_without = [len(ranking.classes)] * n
    for j, cls in enumerate(ranking.classes):
        for mask in cls:
            for i in range(n):
                if mask >> i & 1:
                    if j > worst_with[i]:
                        worst_with[i] = j
                elif j < best_without[i]:
                    best_without[i] = j
    return worst_with, best_without


def check_relative_difference(ranking, rule) -> Verdict:
    """Difference relative to a reference coalition.

    Premise for a pair (s0, x): every coalition containing x is strictly
    better than s0, and s0 is at least as good as every nonempty
    coalition avoiding x. Conclusion: the rule selects x alone. Premises
    are scanned by individual, then by class of s0, then by mask.
    """
    premises = 0
    witness = None
    actual = None
    n = ranking.universe.n
    worst_with, best_without = _separation_bounds(ranking)
    for x in range(n):
        lo, hi = worst_with[x], best_without[x]
        if hi >= len(ranking.classes) or hi <= lo:
            continue
        # every coalition of class hi avoids x (x-coalitions all sit above lo < hi)
        cls = ranking.classes[hi]
        premises += len(cls)
        if witness is not None:
            continue
        if actual is None:
            actual = rule(ranking)
        if set(actual) != {x}:
            witness = Witness(
                axiom="RDF",
                ranking=ranking,
                premise={"s0": cls[0], "x": x},
                expected=f"selection equals {_spell(ranking, (x,))}",
                actual={"selection": _sel(actual)},
            )
    return _verdict(premises, witness)


def rdf_premises(ranking):
    """All (s0, x) pairs firing the relative-difference premise."""
    out = []
    worst_with, best_without = _separation_bounds(ranking)
    for x in range(ranking.universe.n):
        lo, hi = worst_with[x], best_without[x]
        if hi >= len(ranking.classes) or hi <= lo:
            continue
        out.extend((s0, x) for s0 in ranking.classes[hi])
    return out


def check_relative_joint(ranking, rule) -> Verdict:
    """Joint method relative to a reference coalition.

    Premise for (s0, x): the strict superiors of s0 share exactly the
    individual x, the remaining coalitions share nobody, and none of the
    remaining coalitions contains x. Conclusion: the rule selects x
    alone. Scanned by class of s0, then by mask.
    """
    premises = 0
    witness = None
    actual = None
    n = ranking.universe.n
    prefix = _prefix_intersections(ranking)
    l = len(ranking.classes)
    suffix_inter = [0] * (l + 1)
    suffix_union = [0] * (l + 1)
    suffix_inter[l] = ranking.universe.full_mask
    for j in range(l - 1, -1, -1):
        inter, union = suffix_inter[j + 1], suffix_union[j + 1]
        for mask in ranking.classes[j]:
            inter &= mask
            union |= mask
        suffix_inter[j], suffix_union[j] = inter, union
    for j in range(1, l):
        pos = prefix[j - 1]
        if pos.bit_count() != 1:
            continue
        if suffix_inter[j] != 0 or suffix_union[j] & pos:
            continue
        x = pos.bit_length() - 1
        cls = ranking.classes[j]
        premises += len(cls)
        if witness is not None:
            continue
        if actual is None:
            actual = rule(ranking)
        if set(actual) != {x}:
            witness = Witness(
                axiom="RJAD",
                ranking=ranking,
                premise={"s0": cls[0], "x": x},
                expected=f"selection equals {_spell(ranking, (x,))}",
                actual={"selection": _sel(actual)},
            )
    return _verdict(premises, witness)


def rjad_premises(ranking):
    """All (s0, x) pairs firing the relative-joint premise."""
    out = []
    prefix = _prefix_intersections(ranking)
    l = len(ranking.classes)
    full = ranking.universe.full_mask
    for j in range(1, l):
        pos = prefix[j - 1]
        if pos.bit_count() != 1:
            continue
        inter, union = full, 0
        for k in range(j, l):
            for mask in ranking.classes[k]:
                inter &= mask
                union |= mask
        if inter != 0 or union & pos:
            continue
        x = pos.bit_length() - 1
        out.extend((s0, x) for s0 in ranking.classes[j])
    return out


def check_slide_independence(ranking, rule) -> Verdict:
    """Stability of pairwise selection under balanced slides.

    For each pair {x, y} and each slide of a gamma balanced between x and
    y, a premise fires when both the original and the slid selection meet
    {x, y}; the two intersections must then coincide. Premises are
    scanned by source class, gamma bit pattern, destination class, then
    pair; the witness is the first violation in that order.
    """
    base = rule(ranking)
    base_set = set(base)
    n = ranking.universe.n
    relevant = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if x in base_set or y in base_set
    ]
    premises = 0
    witness = None
    if not relevant:
        return Verdict(INAPPLICABLE, 0)
    classes = ranking.classes
    l = len(classes)
    for k1 in range(l):
        cls = classes[k1]
        m = len(cls)
        if m < 2 or l < 2:
            continue
        for bits in range(1, (1 << m) - 1):
            counts = [0] * n
            members = []
            rest = bits
            while rest:
                low = rest & -rest
                mask = cls[low.bit_length() - 1]
                members.append(mask)
                for i in range(n):
                    if mask >> i & 1:
                        counts[i] += 1
                rest ^= low
            balanced = [(x, y) for x, y in relevant if counts[x] == counts[y]]
            if not balanced:
                continue
            gamma = tuple(members)
            for k2 in range(l):
                if k2 == k1:
                    continue
                move = SlideMove(k1, k2, gamma)
                slid = apply_slide(ranking, move)
                after = set(rule(slid))
                for x, y in balanced:
                    before_pair = base_set & {x, y}
                    after_pair = after & {x, y}
                    if not after_pair:
                        continue
                    premises += 1
                    if before_pair != after_pair and witness is None:
                        witness = Witness(
                            axiom="SI",
                            ranking=ranking,
                            premise={
                                "x": x,
                                "y": y,
                                "move": move,
                                "ranking_after": slid,
                            },
                            expected=f"selection restricted to {_spell(ranking, (x, y))} unchanged",
                            actual={
                                "intersection_before": tuple(sorted(before_pair)),
                                "intersection_after": tuple(sorted(after_pair)),
                            },
                        )
    return _verdict(premises, witness)


def check_downward_monotonicity(ranking, rule) -> Verdict:
    """Selected individuals survive deteriorations of coalitions avoiding them.

    For every selected x, every nonempty coalition s avoiding x, and
    every ranking obtained by moving s weakly down, x must stay selected.
    Premises are scanned by x, then by s (ascending mask), then by
    placement; each transformed ranking is evaluated once.
    """
    base = rule(ranking)
    if not base:
        return Verdict(INAPPLICABLE, 0)
    full = ranking.universe.full_mask
    outcomes = {}
    for s in range(1, full + 1):
        if all(s >> x & 1 for x in base):
            continue
        specs = list(enumerate_deterioration_specs(ranking, s))
        results = []
        for spec in specs:
            after = apply_deterioration(ranking, spec)
            results.append((spec, after, set(rule(after))))
        outcomes[s] = results
    premises = 0
    witness = None
    for x in base:
        for s in sorted(outcomes):
            if s >> x & 1:
                continue
            for spec, after, selected in outcomes[s]:
                premises += 1
                if x not in selected and witness is None:
                    witness = Witness(
                        axiom="DMON",
                        ranking=ranking,
                        premise={
                            "x": x,
                            "s": s,
                            "placement": spec,
                            "ranking_after": after,
                        },
                        expected=f"{ranking.universe.names[x]} stays selected after the deterioration",
                        actual={"selection_after": tuple(sorted(selected))},
                    )
    return _verdict(premises, witness)


AXIOMS = {
    "RAG": lambda r, rule: check_relative_agreement(r, rule, weak=False),
    "WRAG": lambda r, rule: check_relative_agreement(r, rule, weak=True),
    "RDF": check_relative_difference,
    "RJAD": check_relative_joint,
    "TAG": lambda r, rule: check_top_agreement(r, rule, strong=False),
    "STAG": lambda r, rule: check_top_agreement(r, rule, strong=True),
    "TDF": check_top_difference,
    "TJAD": check_top_joint,
    "CV": check_concomitant,
    "SI": check_slide_independence,
    "DMON": check_downward_monotonicity,
}


def lookup_axiom(axiom_id: str):
    """Resolve an axiom identifier (case-insensitive) to its checker."""
    try:
        return AXIOMS[axiom_id.upper()]
    except KeyError:
        known = ", ".join(sorted(AXIOMS))
        raise UnknownAxiomError(f"unknown axiom {axiom_id!r} (known: {known})") from None


def replay(witness: Witness, rule) -> Verdict:
    """Re-run the witnessing checker on the stored ranking."""
    return AXIOMS[witness.axiom](witness.ranking, rule)
