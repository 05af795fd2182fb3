import pytest

from wordstats import (
    InputError,
    check_top_letter_identity,
    check_two_bottom_identity,
    count_des_gt,
    count_des_le,
    direct_count_top_letter,
    direct_count_two_bottom,
)


class TestDirectCountTopLetter:
    def test_single_descent(self):
        assert direct_count_top_letter(2, 2, 1) == 1  # word 21

    def test_no_pairs(self):
        for k in (1, 2, 5):
            assert direct_count_top_letter(k, 1, 0) == k

    def test_matches_general_formula(self):
        for k in range(1, 6):
            for n in range(7):
                for s in range(n + 1):
                    assert direct_count_top_letter(k, n, s) == count_des_gt(
                        k, k - 1, n, s
                    )

    def test_validation(self):
        with pytest.raises(InputError):
            direct_count_top_letter(0, 2, 0)
        with pytest.raises(InputError):
            direct_count_top_letter(2, -1, 0)


class TestDirectCountTwoBottom:
    def test_single_descent(self):
        assert direct_count_two_bottom(2, 2, 1) == 1  # word 21

    def test_third_letter_does_not_start_descents_here(self):
        assert direct_count_two_bottom(3, 2, 1) == 1  # 32 starts above 2

    def test_empty_word(self):
        assert direct_count_two_bottom(4, 0, 0) == 1

    def test_needs_two_letters(self):
        with pytest.raises(InputError):
            direct_count_two_bottom(1, 2, 0)

    def test_matches_general_formula(self):
        for k in range(2, 6):
            for n in range(7):
                for s in range(n + 1):
                    assert direct_count_two_bottom(k, n, s) == count_des_le(k, 2, n, s)


class TestTopLetterIdentity:
    def test_small_example(self):
        report = check_top_letter_identity(2, 1, 1)
        assert report.lhs == 1 and report.rhs == 1
        assert report.verdict == "equal"
        assert report.ok
        assert report.alt_rhs is None

    def test_vanishing_when_statistic_too_large(self):
        for n, r, s in [(4, 1, 2), (5, 4, 3), (3, 0, 1)]:
            report = check_top_letter_identity(n, r, s)
            assert report.lhs == 0
            assert report.ok

    def test_frozen_value(self):
        report = check_top_letter_identity(6, 3, 2)
        assert report.lhs == 9
        assert report.rhs == 9

    def test_parameters_recorded(self):
        report = check_top_letter_identity(5, 2, 1)
        assert report.identity == "top-letter-binomial"
        assert report.params == (5, 2, 1)

    def test_negative_parameters_rejected(self):
        with pytest.raises(InputError):
            check_top_letter_identity(-1, 0, 0)

    def test_full_small_grid(self):
        for n in range(8):
            for r in range(n + 1):
                for s in range(n + 1):
                    assert check_top_letter_identity(n, r, s).ok


class TestTwoBottomIdentity:
    def test_empty_case(self):
        report = check_two_bottom_identity(0, 0, 0)
        assert report.lhs == 1 and report.rhs == 1

    def test_full_column(self):
        # s = 0, r = n: both sides evaluate and agree
        for n in range(7):
            report = check_two_bottom_identity(n, n, 0)
            assert report.ok

    def test_middle_example(self):
        assert check_two_bottom_identity(4, 1, 1).ok

    def test_full_small_grid(self):
        for n in range(8):
            for r in range(n + 1):
                for s in range(n + 1):
                    report = check_two_bottom_identity(n, r, s)
                    assert report.ok, (n, r, s, report.lhs, report.rhs)


class TestIdentityReport:
    def test_unequal_verdict(self):
        from wordstats import IdentityReport

        report = IdentityReport("demo", (1,), 2, 3)
        assert report.verdict == "unequal"
        assert not report.ok
