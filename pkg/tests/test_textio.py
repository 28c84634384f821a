import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from millrank import (
    MissingCoalitionError,
    OutOfUniverseError,
    RankingSyntaxError,
    parse_ranking,
    parse_ranking_json,
    render_ranking,
    sample_ranking,
)
from helpers import rk

EXAMPLE_DOC = """\
# three firms, two outcome levels
universe: 1 2 3
class: {1,2,3} {1,2} {1,3}
class: {2,3} {1} {2} {3}
"""


class TestParse:
    def test_example_document(self):
        assert parse_ranking(EXAMPLE_DOC) == rk("123 12 13 / rest")

    def test_missing_universe_line(self):
        with pytest.raises(RankingSyntaxError):
            parse_ranking("class: {1}\n")

    def test_out_of_universe_member(self):
        doc = "universe: 1 2 3\nclass: {1,4}\nclass: {1} {2} {3} {1,2} {1,3} {2,3} {1,2,3}\n"
        with pytest.raises(OutOfUniverseError):
            parse_ranking(doc)

    def test_whitespace_insensitive(self):
        doc = "universe:  a  b\nclass:   { a , b }\nclass: {a}  {b}\n"
        parsed = parse_ranking(doc)
        assert parsed.universe.names == ("a", "b")
        assert parsed.classes == ((3,), (1, 2))

    def test_incomplete_partition(self):
        with pytest.raises(MissingCoalitionError):
            parse_ranking("universe: 1 2\nclass: {1} {2}\n")

    def test_stray_token(self):
        with pytest.raises(RankingSyntaxError) as err:
            parse_ranking("universe: 1 2\nclass: {1} x {2} {1,2}\n")
        assert err.value.line == 2

    def test_empty_coalition(self):
        with pytest.raises(RankingSyntaxError):
            parse_ranking("universe: 1 2\nclass: {} {1} {2} {1,2}\n")

    def test_unknown_directive(self):
        with pytest.raises(RankingSyntaxError):
            parse_ranking("universe: 1\nranking: {1}\n")

    def test_duplicate_universe(self):
        with pytest.raises(RankingSyntaxError):
            parse_ranking("universe: 1\nuniverse: 1\nclass: {1}\n")


class TestRender:
    def test_example_round_trip(self):
        ranking = rk("123 12 13 / rest")
        assert parse_ranking(render_ranking(ranking)) == ranking

    def test_canonical_layout(self):
        text = render_ranking(rk("12 / 1 / rest", n=2))
        assert text == "universe: 1 2\nclass: {1,2}\nclass: {1}\nclass: {2}\n"


class TestJsonMirror:
    def test_round_trip(self):
        document = {
            "universe": ["1", "2", "3"],
            "classes": [[["1", "2", "3"], ["1", "2"], ["1", "3"]],
                        [["2", "3"], ["1"], ["2"], ["3"]]],
        }
        assert parse_ranking_json(document) == rk("123 12 13 / rest")

    def test_accepts_json_strings(self):
        text = '{"universe": ["1"], "classes": [[["1"]]]}'
        assert parse_ranking_json(text).universe.n == 1

    def test_rejects_malformed(self):
        with pytest.raises(RankingSyntaxError):
            parse_ranking_json("[1, 2]")
        with pytest.raises(RankingSyntaxError):
            parse_ranking_json("{nope")


@settings(max_examples=340, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.sampled_from([2, 3, 4]))
def test_parse_render_round_trip_on_samples(seed, n):
    ranking = sample_ranking(n, seed)
    assert parse_ranking(render_ranking(ranking)) == ranking
