import pytest

from pnfkit import (
    ParikhVector,
    ScaleError,
    is_prefix_normal,
    parikh_set,
    parikh_set_bruteforce,
    parikh_set_equal,
    parse_word,
    pnf0,
    pnf1,
    pnf_pair,
    prefix_equivalent,
)
from conftest import all_words, random_word

LONG = parse_word("1010011011000111001011")


class TestNormalForms:
    def test_long_reference_word(self):
        assert pnf1(LONG).to01() == "1110100110100101100101"
        assert pnf0(LONG).to01() == "0001101010101101010111"

    def test_short_example(self):
        w = parse_word("1001101")
        assert pnf1(w).to01() == "1101001"
        assert pnf0(w).to01() == "0011011"

    def test_trivial_cases(self):
        assert pnf0(parse_word("0000")).to01() == "0000"
        assert pnf1(parse_word("")).to01() == ""

    def test_idempotence(self, rng):
        w = parse_word("10110")
        assert pnf1(pnf1(w)) == pnf1(w)
        for _ in range(40):
            v = random_word(rng, rng.randrange(0, 25))
            assert pnf1(pnf1(v)) == pnf1(v)
            assert pnf0(pnf0(v)) == pnf0(v)

    def test_outputs_are_normal(self, rng):
        for _ in range(40):
            v = random_word(rng, rng.randrange(0, 20))
            assert is_prefix_normal(pnf1(v), 1)
            assert is_prefix_normal(pnf0(v), 0)

    def test_reversal_invariance(self, rng):
        for _ in range(40):
            v = random_word(rng, rng.randrange(0, 25))
            assert pnf1(v) == pnf1(v.reverse())
            assert pnf0(v) == pnf0(v.reverse())

    def test_complement_duality(self, rng):
        for _ in range(40):
            v = random_word(rng, rng.randrange(0, 25))
            assert pnf0(v) == pnf1(v.complement()).complement()

    def test_pair_serialization(self):
        pair = pnf_pair(parse_word("1001101"))
        assert pair.serialize() == "PNF1=1101001\nPNF0=0011011\n"
        assert pair.source_length == 7

    def test_uniqueness_and_singletons_exhaustive(self):
        # One scan checks two facts about the 1-equivalence classes of
        # sigma^n, for every n up to 14: each class holds exactly one
        # 1-prefix-normal word (the pnf1 of all its members), and a
        # class of size one means a normal palindrome.
        for n in range(15):
            classes = {}
            for w in all_words(n):
                classes.setdefault(pnf1(w), []).append(w)
            for representative, members in classes.items():
                normal = [w for w in members if is_prefix_normal(w, 1)]
                assert normal == [representative]
                if len(members) == 1:
                    assert members[0] == members[0].reverse()


class TestPrefixEquivalence:
    def test_known_one_class(self):
        words = ["11010", "10110", "01101", "01011"]
        for a in words:
            for b in words:
                assert prefix_equivalent(parse_word(a), parse_word(b), 1)

    def test_known_zero_classes(self):
        assert not prefix_equivalent(parse_word("11010"), parse_word("10110"), 0)
        assert prefix_equivalent(parse_word("01011"), parse_word("10101"), 0)
        assert prefix_equivalent(parse_word("01101"), parse_word("10110"), 0)

    def test_different_lengths_never_equivalent(self):
        assert not prefix_equivalent(parse_word("1"), parse_word("10"), 1)


class TestParikhSets:
    def test_worked_example(self):
        expected = {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)}
        assert parikh_set(parse_word("011")) == {ParikhVector(*p) for p in expected}

    def test_empty_word(self):
        assert parikh_set(parse_word("")) == {ParikhVector(0, 0)}

    def test_101_misses_two_ones(self):
        full = parikh_set(parse_word("011"))
        assert parikh_set(parse_word("101")) == full - {ParikhVector(0, 2)}

    def test_field_order_is_zeros_then_ones(self):
        (vec,) = parikh_set(parse_word("1")) - {ParikhVector(0, 0)}
        assert vec.zeros == 0 and vec.ones == 1
        assert vec == (0, 1)

    def test_suffix_union_equals_bruteforce(self, rng):
        for n in range(9):
            for w in all_words(n):
                assert parikh_set(w) == parikh_set_bruteforce(w)
        for _ in range(20):
            w = random_word(rng, rng.randrange(9, 25))
            assert parikh_set(w) == parikh_set_bruteforce(w)

    def test_scale_guard(self):
        with pytest.raises(ScaleError):
            parikh_set(random_word(__import__("random").Random(1), 25))
        assert parikh_set(parse_word("1" * 25), unsafe_large=True)

    def test_interval_property(self):
        # Per total length, the ones-counts present form one contiguous run.
        for n in range(15):
            for w in all_words(n):
                by_total = {}
                for vec in parikh_set(w):
                    by_total.setdefault(vec.zeros + vec.ones, set()).add(vec.ones)
                for total, ones_set in by_total.items():
                    assert ones_set == set(range(min(ones_set), max(ones_set) + 1))


class TestParikhSetEquality:
    def test_examples(self):
        assert parikh_set_equal(parse_word("011"), parse_word("110"))
        assert pnf1(parse_word("011")).to01() == "110"
        assert pnf0(parse_word("011")).to01() == "011"
        assert not parikh_set_equal(parse_word("011"), parse_word("101"))
        for text in ("", "0", "100110"):
            assert parikh_set_equal(parse_word(text), parse_word(text))

    def test_agrees_with_bruteforce_partitions(self):
        # Grouping by (pnf1, pnf0) must equal grouping by the actual
        # Parikh set, for every word of each length.
        for n in range(11):
            by_forms = {}
            by_sets = {}
            for w in all_words(n):
                by_forms.setdefault((pnf1(w), pnf0(w)), set()).add(w)
                by_sets.setdefault(parikh_set(w), set()).add(w)
            assert set(map(frozenset, by_forms.values())) == set(
                map(frozenset, by_sets.values())
            )

    def test_cross_length_pairs_disagree_nowhere(self):
        assert not parikh_set_equal(parse_word("01"), parse_word("011"))
        assert parikh_set(parse_word("01")) != parikh_set(parse_word("011"))


def test_parikh_csv_serialization():
    from pnfkit.pnf import parikh_set_csv

    text = parikh_set_csv(parikh_set(parse_word("011")))
    assert text == "zeros,ones\n0,0\n0,1\n0,2\n1,0\n1,1\n1,2\n"
