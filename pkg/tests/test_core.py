import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quotamaj import (
    Alternative,
    CountProfile,
    CountTable,
    FullTable,
    Preference,
    QuotaSeq,
    all_count_profiles,
    all_full_profiles,
    count_of,
    count_table_size,
)

A, B, I = Preference.A, Preference.B, Preference.INDIFFERENT


def test_count_of_examples():
    assert count_of((A, B, I)) == CountProfile(1, 1, 3)
    assert count_of((I, I, I)) == CountProfile(0, 0, 3)
    assert count_of((A,) * 5 + (B,) * 6) == CountProfile(5, 6, 11)


def test_all_count_profiles_small():
    assert [(p.na, p.nb) for p in all_count_profiles(1)] == [(0, 0), (0, 1), (1, 0)]
    assert len(all_count_profiles(2)) == 6
    assert len(all_count_profiles(11)) == 78


def test_all_count_profiles_rejects_empty_society():
    with pytest.raises(ValueError):
        all_count_profiles(0)


def test_all_count_profiles_distinct_and_valid():
    for n in range(1, 9):
        profiles = all_count_profiles(n)
        assert len(profiles) == count_table_size(n)
        assert len(set(profiles)) == len(profiles)
        for p in profiles:
            assert 0 <= p.na and 0 <= p.nb and p.na + p.nb <= n
            assert p.indifferent == n - p.na - p.nb


@given(st.lists(st.sampled_from([A, B, I]), min_size=1, max_size=7), st.randoms())
def test_count_of_permutation_invariant(voters, rng):
    shuffled = list(voters)
    rng.shuffle(shuffled)
    assert count_of(tuple(shuffled)) == count_of(tuple(voters))


def test_count_profile_validation():
    with pytest.raises(ValueError):
        CountProfile(2, 2, 3)
    with pytest.raises(ValueError):
        CountProfile(-1, 0, 3)
    with pytest.raises(ValueError):
        CountProfile(0, 0, 0)


def test_quota_seq_validation():
    QuotaSeq(11, (5, 2, 12))
    QuotaSeq(11, (0,))
    with pytest.raises(ValueError):
        QuotaSeq(11, (5, 2))  # no terminal element, evaluation could loop forever
    with pytest.raises(ValueError):
        QuotaSeq(11, (13,))
    with pytest.raises(ValueError):
        QuotaSeq(11, ())
    with pytest.raises(ValueError):
        QuotaSeq(0, (1,))


def test_count_table_structure():
    table = CountTable.from_function(
        3, lambda p: Alternative.A if p.na > p.nb else Alternative.B
    )
    assert len(table.outcomes) == 10
    assert table.outcome(2, 1) is Alternative.A
    assert table.outcome(1, 1) is Alternative.B
    with pytest.raises(ValueError):
        table.outcome(3, 1)
    rebuilt = CountTable.from_mapping(
        3, {(p.na, p.nb): o for p, o in table.items()}
    )
    assert rebuilt == table


def test_count_table_rejects_partial_mapping():
    with pytest.raises(ValueError):
        CountTable.from_mapping(2, {(0, 0): Alternative.A})


def test_full_table_structure():
    table = FullTable.from_function(
        2, lambda prof: Alternative.A if prof[0] is A else Alternative.B
    )
    assert len(table.outcomes) == 9
    assert table.outcome((A, I)) is Alternative.A
    assert table.outcome((B, A)) is Alternative.B
    with pytest.raises(ValueError):
        table.outcome((A,))
    assert list(all_full_profiles(2)) == list(itertools.product((A, B, I), repeat=2))
