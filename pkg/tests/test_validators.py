import pytest

from spinfermion.utils.validators import (
    validate_alpha,
    validate_flavor_count,
    validate_occupations,
    validate_samples,
    validate_spin,
)


@pytest.mark.parametrize("L, ok", [(0, False), (1, True), (6, True), (7, False)])
def test_flavor_count(L, ok):
    assert validate_flavor_count(L, 6)[0] is ok


@pytest.mark.parametrize(
    "two_s, mappable, ok",
    [(3, True, True), (5, True, False), (5, False, True), (4, False, False), (127, True, False), (63, True, True)],
)
def test_spin(two_s, mappable, ok):
    assert validate_spin(two_s, 6, mappable=mappable)[0] is ok


def test_alpha_and_samples():
    assert validate_alpha(3, 3)[0]
    assert not validate_alpha(0, 3)[0]
    assert validate_samples(1)[0]
    assert "positive" in validate_samples(0)[1]


def test_occupations():
    assert validate_occupations([1, 0, 1])[0]
    assert not validate_occupations([])[0]
    assert not validate_occupations([1, 2])[0]
