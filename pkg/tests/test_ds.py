import math

import pytest

from thrackles.ds import TooLarge, is_ds_sequence, lambda3_upper, lambda_brute


def test_is_ds_examples():
    assert is_ds_sequence(list("abab"), 3)
    assert not is_ds_sequence(list("ababa"), 3)
    assert not is_ds_sequence(list("aab"), 1)
    assert not is_ds_sequence(list("aab"), 4)


def test_is_ds_nonconsecutive_alternation():
    # the alternation need not be consecutive
    assert not is_ds_sequence(list("abacaba"), 2)  # a,b,a,b,a hides inside
    assert is_ds_sequence(list("abcba"), 2)


def test_lambda_brute_oracles():
    assert lambda_brute(1, 3) == 1
    assert lambda_brute(2, 3) == 4
    assert lambda_brute(3, 2) == 5  # 2n - 1


def test_lambda_brute_order2_closed_form():
    for n in (1, 2, 3, 4):
        assert lambda_brute(n, 2) == 2 * n - 1


def test_lambda_brute_order1():
    # order 1 forbids a,b,a: each symbol occupies one contiguous run of length 1
    for n in (1, 2, 3, 4):
        assert lambda_brute(n, 1) == n


def test_lambda_brute_monotone():
    table = {(n, s): lambda_brute(n, s) for n in range(1, 5) for s in range(1, 5)}
    for n in range(1, 5):
        for s in range(1, 5):
            if n > 1:
                assert table[(n, s)] >= table[(n - 1, s)]
            if s > 1:
                assert table[(n, s)] >= table[(n, s - 1)]


def test_lambda_brute_below_lambda3_upper():
    for n in range(1, 5):
        assert lambda_brute(n, 3) <= lambda3_upper(n)


def test_lambda_brute_caps():
    with pytest.raises(TooLarge):
        lambda_brute(5, 3)
    with pytest.raises(TooLarge):
        lambda_brute(3, 5)


def test_lambda3_upper_values():
    assert lambda3_upper(1) == pytest.approx(3.0)
    assert lambda3_upper(2) == pytest.approx(2 * 2 * math.log(2) + 6, rel=1e-6)
    assert lambda3_upper(400) == pytest.approx(5993.2, abs=0.05)
