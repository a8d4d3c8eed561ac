import pytest
from hypothesis import given, settings, strategies as st

from soficaut import (
    EvPeriodicPoint, MarkerSystem, MarkerViolation, NotCertified,
    certify_automorphism, code_from_function, compose, enumerate_words,
    in_shift, is_endomorphism, is_involution, marker_to_code, max_overlap,
    shift_automorphism, shift_power_code, validate_marker_system,
)
from soficaut.autos import marker_radius, marker_rule
from soficaut.rules import BlockCode, rules_equal

from oracles import marker_image

EXAMPLE = MarkerSystem.swap("100", "0101", "0", "1")


@pytest.fixture(scope="module")
def g_example(golden):
    return marker_to_code(golden, EXAMPLE)


def test_example_validates(golden):
    assert validate_marker_system(golden, EXAMPLE) is None
    assert max_overlap(EXAMPLE) == 1


def test_example_block_display(golden, g_example):
    # pad to one full window around the data slot
    assert g_example.code.apply_word("0" + "10010101") == "0"
    assert g_example.code.apply_word("0" + "10000101") == "1"
    x = EvPeriodicPoint("0", "10000101", "0", 0)
    assert g_example.code.apply_point(x) == EvPeriodicPoint("0", "10010101", "0", 0)


def test_no_special_block_on_01(g_example):
    x = EvPeriodicPoint.periodic("01")
    assert g_example.code.apply_point(x) == x


def test_rule_matches_brute_force(golden, g_example):
    r = g_example.radius
    for w in enumerate_words(golden, 2 * r + 1 + 6):
        got = g_example.code.apply_word(w)
        assert got == marker_image(w, "100", "0101", EXAMPLE.perm)[r:-r], w


def test_even_odd_ones_rejected(even):
    v = validate_marker_system(even, MarkerSystem.swap("111", "111", "0", "00"))
    assert v.kind == "NonSynchronizingMarker"


def test_violation_kinds(golden):
    assert validate_marker_system(golden, MarkerSystem.swap("100", "0101", "0", "00")).kind == \
        "UnequalDataLength"
    v = validate_marker_system(golden, MarkerSystem.swap("0", "0", "0", "1"))
    assert v.kind == "OverlapViolation" and v.detail["length"] > 1
    assert validate_marker_system(golden, MarkerSystem.swap("100", "1", "0", "1")).kind == \
        "NotAllowable"
    bad = MarkerSystem("100", "0101", ("0", "1"), ("0", "0"))
    assert validate_marker_system(golden, bad).kind == "NotPermutation"
    with pytest.raises(MarkerViolation):
        marker_to_code(golden, MarkerSystem.swap("0", "0", "0", "1"))


def test_identity_permutation(golden):
    g = marker_to_code(golden, MarkerSystem("100", "0101", ("0", "1"), ("0", "1")))
    assert g.code.is_identity()


def test_involution_exhaustive(golden, g_example):
    gg = compose(g_example.code, g_example.code)
    assert gg.radius == 2 * g_example.radius
    assert gg.is_identity()
    assert is_involution(golden, g_example, "exhaustive")
    assert is_involution(golden, g_example, "marker")
    # and directly on every window of the composed radius
    r = gg.radius
    for w in enumerate_words(golden, 2 * r + 1):
        assert gg.apply_word(w) == w[r]


def test_inverse_composition(golden, g_example):
    assert compose(g_example.code, g_example.inverse).is_identity()


ORDER_SYSTEMS = [
    ("golden_mean", "100", "0101", ("000", "001", "010", "100")),
    ("full2", "0001", "1111", ("00", "01", "10", "11")),
]


def _perms(data):
    a, b, c, d = data
    return [
        ((a, b, c, d), 1),
        ((b, a, c, d), 2),
        ((b, c, a, d), 3),
        ((b, c, d, a), 4),
        ((b, a, d, c), 2),
    ]


@pytest.mark.parametrize("name,left,right,data", ORDER_SYSTEMS)
def test_rule_order_equals_perm_order(request, name, left, right, data):
    c = request.getfixturevalue(name if name == "full2" else "golden")
    for images, order in _perms(data):
        ms = MarkerSystem(left, right, data, images)
        g = marker_to_code(c, ms)
        assert g.order == order
        cert = certify_automorphism(c, g.code, order_bound=4)
        assert cert.order == order


def test_scan_direction_irrelevant(golden, full2):
    for c, ms in [(golden, EXAMPLE),
                  (full2, MarkerSystem("0001", "1111", ("00", "01", "10", "11"), ("01", "10", "11", "00")))]:
        assert rules_equal(marker_rule(c, ms, "ltr"), marker_rule(c, ms, "rtl"))


def test_locality(golden, g_example):
    r = g_example.radius
    blocks = [EXAMPLE.block(d) for d in EXAMPLE.data]
    for m in range(2 * r + 1, 2 * r + 4):
        for w in enumerate_words(golden, m):
            if not any(b in w for b in blocks):
                assert g_example.code.apply_word(w) == w[r:-r]


def test_endomorphism(golden, g_example):
    assert is_endomorphism(golden, g_example.code)
    assert is_endomorphism(golden, g_example.inverse)
    assert is_endomorphism(golden, shift_power_code(3, golden))
    ones = code_from_function(golden, 0, lambda w: "1")
    assert not is_endomorphism(golden, ones)


def test_certify(golden, g_example, full2):
    cert = certify_automorphism(golden, g_example.code)
    assert cert.certificate == "order" and cert.order == 2
    s = certify_automorphism(golden, shift_power_code(1, golden), shift_power_code(-1, golden))
    assert s.certificate == "inverse"
    with pytest.raises(NotCertified):
        certify_automorphism(golden, shift_power_code(1, golden), order_bound=3)


def test_xor_not_certified(full2):
    xor = code_from_function(full2, 1, lambda w: "1" if w[1] != w[2] else "0")
    assert is_endomorphism(full2, xor)
    # two fixed points collapse, so no inverse can exist
    assert xor.apply_point(EvPeriodicPoint.periodic("0")) == xor.apply_point(EvPeriodicPoint.periodic("1"))
    for bound in (1, 2, 4):
        with pytest.raises(NotCertified):
            certify_automorphism(full2, xor, order_bound=bound)


def test_radius_not_assumed(golden):
    ms = MarkerSystem.swap("1000", "00101", "000", "001")
    g = marker_to_code(golden, ms)
    assert g.radius >= marker_radius(ms)
    assert is_involution(golden, g, "exhaustive")


points = st.builds(
    EvPeriodicPoint,
    st.sampled_from(["0", "01", "001"]),
    st.sampled_from(["", "10000101", "10010101", "1001010010000101"]),
    st.sampled_from(["0", "01", "0001"]),
    st.integers(-6, 6),
)


@settings(max_examples=60, deadline=None)
@given(points, st.integers(-3, 3))
def test_commutes_with_shift(x, j):
    from soficaut import bundled
    c = bundled("golden_mean")
    if not in_shift(c, x):
        return
    g = marker_to_code(c, EXAMPLE).code
    assert g.apply_point(x.shift(j)) == g.apply_point(x).shift(j)
    assert in_shift(c, g.apply_point(x))


def test_shift_automorphism_inverse(golden):
    s = shift_automorphism(golden, 2)
    assert compose(s.code, s.inverse).is_identity()
    assert s.inv().code.equals(shift_power_code(-2, golden))
