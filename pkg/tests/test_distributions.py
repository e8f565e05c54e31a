"""Length distributions: exact counts, percentages, deviations, grouping."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wordmill import (
    LengthDistribution,
    Wheel,
    WheelSystem,
    binomial_reference,
    convolve,
    deviation,
    group_wheels,
    percentage_hundredths,
    percentages,
    preset,
    reference_systems,
    system_length_distribution,
    wheel_length_distribution,
)
from wordmill.distributions import parse_distribution_csv

# Frozen per-wheel length profiles and the resulting whole-system counts for
# the three bundled 24-fragment configurations.  Lengths run 1..10; the three
# wheels hold 24 fragments each, so every column totals 24**3 = 13824.
WHEEL_PROFILES = {
    "binomial": (
        {0: 3, 1: 9, 2: 9, 3: 3},
        {0: 3, 1: 9, 2: 9, 3: 3},
        {1: 3, 2: 9, 3: 9, 4: 3},
    ),
    "alternative_1": (
        {0: 2, 1: 10, 2: 8, 3: 4},
        {0: 3, 1: 7, 2: 10, 3: 4},
        {1: 5, 2: 7, 3: 9, 4: 3},
    ),
    "alternative_2": (
        {0: 5, 1: 7, 2: 7, 3: 5},
        {0: 1, 1: 11, 2: 11, 3: 1},
        {1: 4, 2: 8, 3: 8, 4: 4},
    ),
}

SYSTEM_COUNTS = {
    "binomial": [27, 243, 972, 2268, 3402, 3402, 2268, 972, 243, 27],
    "alternative_1": [30, 262, 932, 2092, 3130, 3322, 2444, 1204, 360, 48],
    "alternative_2": [20, 288, 1092, 2284, 3228, 3228, 2284, 1092, 288, 20],
}

PERCENT_HUNDREDTHS = {
    "binomial": [20, 176, 703, 1641, 2461, 2461, 1641, 703, 176, 20],
    "alternative_1": [22, 190, 674, 1513, 2264, 2403, 1768, 871, 260, 35],
    "alternative_2": [14, 208, 790, 1652, 2335, 2335, 1652, 790, 208, 14],
}


def counts_list(dist, lengths=range(1, 11)):
    return [dist.count(n) for n in lengths]


distributions = st.dictionaries(
    st.integers(0, 6), st.integers(1, 50), min_size=1, max_size=5
).map(LengthDistribution)


small_systems = st.lists(
    st.lists(st.text(alphabet="ab", max_size=2), min_size=1, max_size=4).map(
        lambda frags: Wheel(tuple(frags))
    ),
    min_size=1,
    max_size=3,
).map(lambda wheels: WheelSystem(tuple(wheels)))


class TestLengthDistribution:
    def test_zero_counts_dropped(self):
        dist = LengthDistribution({1: 5, 2: 0, 3: 1})
        assert dist.counts == {1: 5, 3: 1}
        assert dist.lengths() == [1, 3]
        assert dist.total == 6

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            LengthDistribution({1: -1})
        with pytest.raises(ValueError):
            LengthDistribution({-1: 1})

    def test_from_lengths(self):
        dist = LengthDistribution.from_lengths([2, 3, 2, 2])
        assert dist.counts == {2: 3, 3: 1}


class TestWheelProfiles:
    @pytest.mark.parametrize("name", sorted(WHEEL_PROFILES))
    def test_bundled_wheel_profiles(self, name):
        system = reference_systems()[name]
        for wheel, expected in zip(system.wheels, WHEEL_PROFILES[name]):
            assert wheel_length_distribution(wheel).counts == expected

    def test_empty_only_wheel(self):
        assert wheel_length_distribution(Wheel(("",))).counts == {0: 1}


class TestConvolve:
    def test_worked_example(self):
        a = LengthDistribution({0: 1, 1: 2})
        b = LengthDistribution({1: 3, 2: 1})
        assert convolve(a, b).counts == {1: 3, 2: 7, 3: 2}

    @given(distributions)
    def test_identity(self, dist):
        assert convolve(dist, LengthDistribution({0: 1})) == dist

    @given(distributions, distributions)
    def test_commutative(self, a, b):
        assert convolve(a, b) == convolve(b, a)

    @given(distributions, distributions, distributions)
    def test_associative(self, a, b, c):
        assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))

    @given(distributions, distributions)
    def test_total_and_support(self, a, b):
        out = convolve(a, b)
        assert out.total == a.total * b.total
        assert min(out.lengths()) == min(a.lengths()) + min(b.lengths())
        assert max(out.lengths()) == max(a.lengths()) + max(b.lengths())


class TestSystemDistribution:
    @pytest.mark.parametrize("name", sorted(SYSTEM_COUNTS))
    def test_reference_counts(self, name):
        system = reference_systems()[name]
        dist = system_length_distribution(system)
        assert dist.total == 24**3
        assert counts_list(dist) == SYSTEM_COUNTS[name]

    @pytest.mark.parametrize("name", sorted(WHEEL_PROFILES))
    def test_counts_follow_from_profiles(self, name):
        # The frozen columns are themselves the convolution of the profiles.
        acc = LengthDistribution({0: 1})
        for profile in WHEEL_PROFILES[name]:
            acc = convolve(acc, LengthDistribution(dict(profile)))
        assert counts_list(acc) == SYSTEM_COUNTS[name]

    def test_symmetric_columns(self):
        for name in ("binomial", "alternative_2"):
            column = SYSTEM_COUNTS[name]
            assert column == column[::-1]

    @pytest.mark.parametrize("name", ["binomial_24", "nine_wheel", "tiltman", "roman"])
    def test_modes_agree_on_presets(self, name):
        system = preset(name)
        assert system_length_distribution(system, "tuple") == system_length_distribution(
            system, "exhaustive"
        )

    @given(small_systems)
    @settings(max_examples=40, deadline=None)
    def test_modes_agree_property(self, system):
        assert system_length_distribution(system, "tuple") == system_length_distribution(
            system, "exhaustive"
        )

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            system_length_distribution(preset("nine_wheel"), "sampled")


class TestBinomialReference:
    def test_matches_binomial_system(self):
        ref = binomial_reference(9, shift=1, total=13824)
        assert counts_list(ref) == SYSTEM_COUNTS["binomial"]

    def test_unscaled(self):
        ref = binomial_reference(9, shift=1)
        assert counts_list(ref) == [1, 9, 36, 84, 126, 126, 84, 36, 9, 1]
        assert ref.total == 512

    def test_zero_trials_is_spike(self):
        assert binomial_reference(0, shift=4).counts == {4: 1}

    def test_exact_requires_divisible_total(self):
        with pytest.raises(ValueError):
            binomial_reference(9, total=1000)

    def test_rounded_mode(self):
        ref = binomial_reference(2, total=10, exact=False)
        assert ref.counts == {0: 3, 1: 5, 2: 3}

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            binomial_reference(-1)
        with pytest.raises(ValueError):
            binomial_reference(3, shift=-1)
        with pytest.raises(ValueError):
            binomial_reference(3, total=0)


class TestPercentages:
    @pytest.mark.parametrize("name", sorted(PERCENT_HUNDREDTHS))
    def test_reference_percentages(self, name):
        dist = system_length_distribution(reference_systems()[name])
        hundredths = percentage_hundredths(dist)
        assert [hundredths[n] for n in range(1, 11)] == PERCENT_HUNDREDTHS[name]
        assert percentages(dist) == [
            (n, PERCENT_HUNDREDTHS[name][n - 1] / 100) for n in range(1, 11)
        ]

    def test_rounds_half_up(self):
        # 1/800 = 0.125%, exactly halfway in hundredths; half-up gives 0.13.
        dist = LengthDistribution({1: 1, 2: 799})
        assert percentage_hundredths(dist)[1] == 13

    def test_truncates_below_half(self):
        dist = LengthDistribution({1: 1, 2: 2})
        assert percentage_hundredths(dist)[1] == 3333

    def test_empty_distribution(self):
        with pytest.raises(ValueError):
            percentage_hundredths(LengthDistribution({}))


class TestDeviation:
    def test_identical_distributions(self):
        dist = system_length_distribution(preset("binomial_24"))
        report = deviation(dist, dist)
        assert report.max_percentage_point_diff == 0.0
        assert report.total_variation == 0.0
        assert report.at_length == 1

    def test_scaling_invariance(self):
        a = LengthDistribution({1: 1, 2: 3})
        b = LengthDistribution({1: 10, 2: 30})
        report = deviation(a, b)
        assert report.max_percentage_point_diff == 0.0
        assert report.total_variation == 0.0

    def test_tie_breaks_to_smallest_length(self):
        report = deviation(LengthDistribution({1: 1}), LengthDistribution({2: 1}))
        assert report.max_percentage_point_diff == 100.0
        assert report.at_length == 1
        assert report.total_variation == 1.0

    @pytest.mark.parametrize(
        "name, max_gap, gap_length",
        [("alternative_1", 272, 5), ("alternative_2", 174, 5)],
    )
    def test_alternatives_against_binomial(self, name, max_gap, gap_length):
        systems = reference_systems()
        observed = system_length_distribution(systems[name])
        ref = system_length_distribution(systems["binomial"])
        report = deviation(observed, ref)

        diffs = [
            abs(a - b) for a, b in zip(SYSTEM_COUNTS[name], SYSTEM_COUNTS["binomial"])
        ]
        assert max(diffs) == max_gap
        assert diffs.index(max_gap) + 1 == gap_length
        assert report.max_percentage_point_diff == pytest.approx(
            float(Fraction(100 * max_gap, 13824)), abs=1e-12
        )
        assert report.at_length == gap_length
        assert report.total_variation == pytest.approx(
            float(Fraction(sum(diffs), 2 * 13824)), abs=1e-12
        )

    def test_alternative_2_gap_is_a_tie(self):
        # Symmetric columns put the same gap at lengths 5 and 6.
        diffs = [
            abs(a - b)
            for a, b in zip(SYSTEM_COUNTS["alternative_2"], SYSTEM_COUNTS["binomial"])
        ]
        assert diffs[4] == diffs[5] == max(diffs)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            deviation(LengthDistribution({}), LengthDistribution({1: 1}))


class TestGroupWheels:
    def test_nine_wheel_grouping(self):
        grouped = group_wheels(preset("nine_wheel"), [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
        profiles = [wheel_length_distribution(w).counts for w in grouped.wheels]
        assert profiles == [
            {0: 1, 1: 3, 2: 3, 3: 1},
            {0: 1, 1: 3, 2: 3, 3: 1},
            {1: 1, 2: 3, 3: 3, 4: 1},
        ]

    def test_singleton_grouping_is_identity(self):
        system = preset("tiltman")
        grouped = group_wheels(system, [(0,), (1,)])
        assert grouped == system

    def test_pair_of_coin_wheels(self):
        system = WheelSystem((Wheel(("", "a")), Wheel(("", "b"))))
        grouped = group_wheels(system, [(0, 1)])
        assert wheel_length_distribution(grouped.wheels[0]).counts == {0: 1, 1: 2, 2: 1}

    def test_requires_contiguous_partition(self):
        system = preset("nine_wheel")
        with pytest.raises(ValueError):
            group_wheels(system, [(0, 2, 1), (3, 4, 5), (6, 7, 8)])
        with pytest.raises(ValueError):
            group_wheels(system, [(0, 1, 2), (3, 4, 5)])

    def test_distribution_preserved(self):
        system = preset("nine_wheel")
        grouped = group_wheels(system, [(0, 1, 2, 3), (4, 5, 6, 7, 8)])
        assert system_length_distribution(grouped) == system_length_distribution(system)

    @given(small_systems, st.data())
    @settings(max_examples=40, deadline=None)
    def test_distribution_preserved_property(self, system, data):
        n = len(system.wheels)
        cuts = data.draw(
            st.lists(st.integers(1, n), max_size=2, unique=True).map(sorted)
        )
        bounds = [0] + [c for c in cuts if c < n] + [n]
        grouping = [tuple(range(a, b)) for a, b in zip(bounds, bounds[1:])]
        grouped = group_wheels(system, grouping)
        assert system_length_distribution(grouped) == system_length_distribution(system)


class TestDistributionCsv:
    def test_with_header(self):
        dist = parse_distribution_csv("length,count\n1,5\n3,2\n")
        assert dist.counts == {1: 5, 3: 2}

    def test_without_header(self):
        assert parse_distribution_csv("2,7\n").counts == {2: 7}

    def test_duplicate_lengths_sum(self):
        assert parse_distribution_csv("1,2\n1,3\n").counts == {1: 5}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            parse_distribution_csv("")
