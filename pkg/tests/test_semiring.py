from dataclasses import replace

import pytest
from hypothesis import given

from algebra import (
    BOOLEAN,
    FUZZY,
    NATURAL,
    NEG_INF,
    POS_INF,
    REGISTRY,
    check_semiring_laws,
    fuzzy_int,
    fuzzy_plus,
    fuzzy_times,
    get_semiring,
    list_semirings,
    render_fuzzy,
)
from errors import EngineError

from conftest import fuzzy_values


@pytest.mark.parametrize("a, b, expected", [
    (3, 5, 5),
    (NEG_INF, 7, 7),
    (POS_INF, 7, POS_INF),
])
def test_fuzzy_plus_is_max(a, b, expected):
    assert fuzzy_plus(a, b) == expected


@pytest.mark.parametrize("a, b, expected", [
    (3, 5, 3),
    (POS_INF, 7, 7),
    (NEG_INF, 7, NEG_INF),
])
def test_fuzzy_times_is_min(a, b, expected):
    assert fuzzy_times(a, b) == expected


@given(fuzzy_values(), fuzzy_values())
def test_fuzzy_order_is_total(a, b):
    assert fuzzy_plus(a, b) in (a, b)
    assert fuzzy_times(a, b) in (a, b)
    assert fuzzy_times(a, b) <= fuzzy_plus(a, b)


def test_fuzzy_int_range():
    assert fuzzy_int(2 ** 63 - 1) == 2 ** 63 - 1
    with pytest.raises(EngineError):
        fuzzy_int(2 ** 63)
    with pytest.raises(EngineError):
        fuzzy_int(True)


def test_render_fuzzy():
    assert [render_fuzzy(x) for x in (NEG_INF, 0, 3, POS_INF)] == ["-inf", "0", "3", "inf"]


@pytest.mark.parametrize("ops, samples", [
    (BOOLEAN, [False, True]),
    (NATURAL, [0, 1, 2, 3, 7]),
    (FUZZY, [NEG_INF, -1, 0, 2, POS_INF]),
])
def test_instances_satisfy_laws(ops, samples):
    assert check_semiring_laws(ops, samples, check_idempotence=ops.idempotent) == []


def test_natural_is_not_idempotent():
    report = check_semiring_laws(NATURAL, [0, 1, 2], check_idempotence=True)
    assert {v.law for v in report} == {"idempotence"}


def test_broken_instance_is_detected():
    broken = replace(NATURAL, name="broken", plus=max, times=lambda a, b: (a + 2 * b) // 2)
    report = check_semiring_laws(broken, [0, 1, 2, 3])
    assert report
    assert {"times_identity", "annihilation"} <= {v.law for v in report}


def test_law_check_needs_samples():
    with pytest.raises(ValueError):
        check_semiring_laws(BOOLEAN, [])


def test_sum_and_product_helpers():
    assert NATURAL.sum([1, 2, 3]) == 6
    assert NATURAL.product([]) == 1
    assert FUZZY.sum([]) == NEG_INF
    assert FUZZY.product([4, 2, POS_INF]) == 2


def test_registry_lookup():
    assert get_semiring("fuzzy").ops is FUZZY
    assert get_semiring("tropical") is None
    assert [info.key for info in list_semirings()] == list(REGISTRY)


@pytest.mark.parametrize("key", list(REGISTRY))
def test_registry_samples_satisfy_laws(key):
    info = REGISTRY[key]
    assert check_semiring_laws(info.ops, info.samples) == []
