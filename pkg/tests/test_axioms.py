import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from millrank import (
    AXIOMS,
    INAPPLICABLE,
    SATISFIED,
    VIOLATED,
    RULES,
    UnknownAxiomError,
    apply_slide,
    check_concomitant,
    check_downward_monotonicity,
    check_relative_agreement,
    check_relative_difference,
    check_relative_joint,
    check_slide_independence,
    check_top_agreement,
    check_top_difference,
    check_top_joint,
    concomitant_set,
    const_x,
    f_star,
    les,
    lookup_axiom,
    obi,
    plurality,
    replay,
    sample_ranking,
    split_plurality,
)
from millrank.axioms import rdf_premises, rjad_premises
from helpers import cmask, rk, sel

EX2 = rk("123 12 13 / rest")
TIE3 = rk("rest")


class TestTopAgreement:
    def test_les_violates_strong_on_pair_intersection(self):
        verdict = check_top_agreement(rk("12 / 1 / rest"), les, strong=True)
        assert verdict.status == VIOLATED
        assert verdict.witness.actual == {"selection": sel("1")}
        assert verdict.witness.premise == {"top_intersection": sel("12")}

    def test_weak_form_needs_singleton(self):
        verdict = check_top_agreement(rk("12 / 1 / rest"), les, strong=False)
        assert verdict.status == INAPPLICABLE
        assert verdict.premises_checked == 0

    def test_total_tie_inapplicable(self):
        for strong in (False, True):
            for rule in RULES.values():
                assert check_top_agreement(TIE3, rule, strong=strong).status == INAPPLICABLE

    def test_plurality_satisfies_on_example(self):
        assert check_top_agreement(EX2, plurality, strong=True).status == SATISFIED


class TestTopDifference:
    def test_satisfied_when_top_is_exactly_one_membership_family(self):
        verdict = check_top_difference(rk("1 12 13 123 / rest"), plurality)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked == 1

    def test_inapplicable_when_a_member_coalition_is_low(self):
        for rule in RULES.values():
            assert check_top_difference(EX2, rule).status == INAPPLICABLE

    def test_total_tie_inapplicable(self):
        assert check_top_difference(TIE3, plurality).status == INAPPLICABLE


class TestTopJoint:
    def test_obi_satisfies_on_membership_family(self):
        verdict = check_top_joint(rk("1 12 13 123 / rest"), obi)
        assert verdict.status == SATISFIED

    def test_inapplicable_when_below_contains_the_individual(self):
        assert check_top_joint(EX2, plurality).status == INAPPLICABLE

    def test_total_tie_inapplicable(self):
        assert check_top_joint(TIE3, plurality).status == INAPPLICABLE


class TestConcomitant:
    def test_les_violates(self):
        verdict = check_concomitant(rk("12 / 2 / 1 13 123 / rest"), les)
        assert verdict.status == VIOLATED
        assert verdict.witness.premise == {"concomitant": sel("1")}
        assert verdict.witness.actual == {"selection": sel("2")}

    def test_plurality_satisfies_same_ranking(self):
        verdict = check_concomitant(rk("12 / 2 / 1 13 123 / rest"), plurality)
        assert verdict.status == SATISFIED

    def test_total_tie_inapplicable(self):
        assert check_concomitant(TIE3, les).status == INAPPLICABLE


class TestRelativeAgreement:
    def test_example_satisfied(self):
        verdict = check_relative_agreement(EX2, plurality)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked == 4  # each bottom-class reference

    def test_total_tie_inapplicable(self):
        assert check_relative_agreement(TIE3, plurality).status == INAPPLICABLE

    def test_weak_form_with_constant_rule(self):
        verdict = check_relative_agreement(rk("12 123 / 1 / rest"), const_x, weak=True)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked == 4

    def test_strict_form_fails_for_constant_rule(self):
        verdict = check_relative_agreement(rk("12 123 / 1 / rest"), const_x, weak=False)
        assert verdict.status == VIOLATED
        assert verdict.witness.premise["x"] == sel("1")[0]


PROP1_RANKING = rk("12 123 / 1 13 / 2 23 / 3")


class TestRelativeDifference:
    def test_premises_on_the_incompatibility_construction(self):
        pairs = rdf_premises(PROP1_RANKING)
        assert (cmask("2"), sel("1")[0]) in pairs
        assert {x for _, x in pairs} == {sel("1")[0]}

    def test_forced_conclusion_conflicts_with_concomitant(self):
        # the premise forces {1} while 2 must also be chosen, so every
        # rule fails one of the two checks on this ranking
        assert sel("2")[0] in concomitant_set(PROP1_RANKING)
        verdict = check_relative_difference(PROP1_RANKING, plurality)
        assert verdict.status == VIOLATED  # plurality picks {1,2}
        assert verdict.witness.expected == "selection equals {1}"
        cv = check_concomitant(PROP1_RANKING, plurality)
        assert cv.status == SATISFIED

    def test_member_references_never_qualify(self):
        for ranking in (EX2, PROP1_RANKING, rk("1 12 13 123 / rest")):
            for s0, x in rdf_premises(ranking):
                assert not s0 >> x & 1

    def test_total_tie_inapplicable(self):
        assert check_relative_difference(TIE3, plurality).status == INAPPLICABLE


class TestRelativeJoint:
    def test_satisfied_on_membership_family(self):
        verdict = check_relative_joint(rk("1 12 13 123 / rest"), plurality)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked == 3

    def test_premise_fails_when_reference_side_contains_x(self):
        assert check_relative_joint(EX2, plurality).status == INAPPLICABLE

    def test_total_tie_inapplicable(self):
        assert check_relative_joint(TIE3, plurality).status == INAPPLICABLE


class TestSlideIndependence:
    def test_split_plurality_fails_on_four_individual_instance(self):
        ranking = rk("1 2 23 14 / rest", n=4)
        verdict = check_slide_independence(ranking, split_plurality)
        assert verdict.status == VIOLATED
        witness = verdict.witness
        assert witness.actual["intersection_before"] != witness.actual["intersection_after"]
        move = witness.premise["move"]
        assert apply_slide(ranking, move) == witness.premise["ranking_after"]

    def test_plurality_satisfies_same_instance(self):
        verdict = check_slide_independence(rk("1 2 23 14 / rest", n=4), plurality)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked > 0

    def test_total_tie_inapplicable(self):
        for rule in RULES.values():
            assert check_slide_independence(TIE3, rule).status == INAPPLICABLE

    def test_f_star_fails_at_three_individuals(self):
        verdict = check_slide_independence(rk("1 2 12 / 3 / rest"), f_star)
        assert verdict.status == VIOLATED


class TestDownwardMonotonicity:
    def test_f_star_fails_on_odd_product_instance(self):
        verdict = check_downward_monotonicity(rk("1 2 12 / 3 / rest"), f_star)
        assert verdict.status == VIOLATED
        witness = verdict.witness
        assert witness.premise["x"] not in [
            i for i in range(3) if witness.premise["s"] >> i & 1
        ]
        after = witness.premise["ranking_after"]
        assert witness.premise["x"] not in f_star(after)

    def test_plurality_keeps_the_selected_firm(self):
        verdict = check_downward_monotonicity(EX2, plurality)
        assert verdict.status == SATISFIED
        assert verdict.premises_checked > 0

    def test_constant_rule_always_satisfies(self):
        for ranking in (EX2, PROP1_RANKING, rk("1 2 12 / 3 / rest")):
            assert check_downward_monotonicity(ranking, const_x).status == SATISFIED


class TestRegistryAndReplay:
    def test_registry_is_complete(self):
        assert set(AXIOMS) == {
            "RAG", "WRAG", "RDF", "RJAD", "TAG", "STAG", "TDF", "TJAD", "CV", "SI", "DMON",
        }

    def test_lookup_is_case_insensitive(self):
        assert lookup_axiom("stag") is AXIOMS["STAG"]

    def test_lookup_unknown(self):
        with pytest.raises(UnknownAxiomError):
            lookup_axiom("banzhaf")

    @pytest.mark.parametrize(
        "axiom,ranking,rule",
        [
            ("STAG", rk("12 / 1 / rest"), les),
            ("CV", rk("12 / 2 / 1 13 123 / rest"), les),
            ("TAG", rk("1 / 2 23 / 12 123 / 3 13"), obi),
            ("SI", rk("1 2 23 14 / rest", n=4), split_plurality),
            ("DMON", rk("1 2 12 / 3 / rest"), f_star),
            ("RDF", PROP1_RANKING, plurality),
        ],
    )
    def test_witness_replays_to_violated(self, axiom, ranking, rule):
        verdict = AXIOMS[axiom](ranking, rule)
        assert verdict.status == VIOLATED
        assert replay(verdict.witness, rule).status == VIOLATED
        assert replay(verdict.witness, rule).witness == verdict.witness

    def test_verdict_invariants_across_rules_and_axioms(self):
        for seed in range(10):
            ranking = sample_ranking(3, seed + 400)
            for check in AXIOMS.values():
                for rule in RULES.values():
                    verdict = check(ranking, rule)
                    assert (verdict.status == INAPPLICABLE) == (verdict.premises_checked == 0)
                    assert (verdict.witness is not None) == (verdict.status == VIOLATED)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_strong_agreement_implies_weak_or_inapplicable(seed):
    ranking = sample_ranking(3, seed)
    for rule in RULES.values():
        strong = check_top_agreement(ranking, rule, strong=True)
        if strong.status == SATISFIED:
            weak = check_top_agreement(ranking, rule, strong=False)
            assert weak.status in (SATISFIED, INAPPLICABLE)


def _positives_intersection(ranking, s0):
    inter = ranking.universe.full_mask
    j = ranking.index_of(s0)
    for cls in ranking.classes[:j]:
        for mask in cls:
            inter &= mask
    return inter


def test_relative_premises_induce_agreement_premise_exhaustive_n2(all_n2):
    for ranking in all_n2:
        for s0, x in rdf_premises(ranking) + rjad_premises(ranking):
            assert _positives_intersection(ranking, s0) == 1 << x


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_relative_premises_induce_agreement_premise_sampled_n3(seed):
    ranking = sample_ranking(3, seed)
    for s0, x in rdf_premises(ranking) + rjad_premises(ranking):
        assert _positives_intersection(ranking, s0) == 1 << x
