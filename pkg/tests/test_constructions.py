import pytest

from soficaut import (
    EvPeriodicPoint, MarkerSystem, NeedWitness, NotProper, SearchExhausted,
    bundled, enumerate_per_k, enumerate_words, identify_power_of_shift,
    in_cylinder_m, is_involution, is_synchronizing, marker_to_code,
    minimality_witness, nonoverlap_sync_marker, orbit_id,
    orbit_permutation_auto, pingpong, pingpong_check, prop31, ryan_system,
    shift_automorphism, validate_marker_system,
)
from soficaut.autos import identity_automorphism
from soficaut.constructions import _case2, hyperbolic, self_overlaps, sync_length

from oracles import (
    even_member, full_member, golden_member, sync_by_membership, unbordered,
)
from conftest import FAMILY

MEMBERS = {"golden": golden_member, "even": even_member, "full2": full_member}


@pytest.mark.parametrize("name", ["golden", "even", "full2"])
@pytest.mark.parametrize("n", range(1, 9))
def test_nonoverlap_marker_properties(request, name, n):
    c = request.getfixturevalue(name)
    m = nonoverlap_sync_marker(c, n)
    assert len(m) >= n
    assert unbordered(m)
    assert sync_by_membership(MEMBERS[name], "01", m, depth=4)


def test_nonoverlap_marker_values(golden, even):
    assert [nonoverlap_sync_marker(golden, n) for n in (1, 2, 3)] == ["001", "00001", "0000001"]
    assert [nonoverlap_sync_marker(even, n) for n in (1, 2)] == ["0011", "000011"]


def test_membership_oracles_agree(golden, even):
    for c, member in ((golden, golden_member), (even, even_member)):
        lang = set(enumerate_words(c, 8))
        assert {w for w in map("".join, __import__("itertools").product("01", repeat=8))
                if member(w)} == lang


@pytest.mark.parametrize("name,R", [("golden", 0), ("golden", 1), ("golden", 2),
                                    ("even", 0), ("even", 1), ("full2", 0), ("full2", 1)])
def test_ryan_invariants(request, name, R):
    c = request.getfixturevalue(name)
    rs = ryan_system(c, R)
    assert is_synchronizing(c, rs.marker)
    assert 2 * R + 1 <= rs.n <= len(rs.marker)
    assert len(rs.orbits) >= 2
    # coverage by direct scan
    for w in enumerate_words(c, 2 * R + 1):
        assert any(w in d for d in rs.data)
    for d in rs.data:
        assert is_synchronizing(c, rs.marker + d + rs.marker)


def test_ryan_golden_values(golden):
    rs = ryan_system(golden, 1)
    assert (rs.marker, rs.n) == ("000000001", 4)
    assert rs.data == ("0000", "0001", "0010", "0100", "0101")


def test_ryan_bound(golden):
    with pytest.raises(SearchExhausted):
        ryan_system(golden, 3, max_n=7)


def test_identify_power(golden, even):
    for c in (golden, even):
        for j in range(-3, 4):
            assert identify_power_of_shift(c, shift_automorphism(c, j)) == j
        assert identify_power_of_shift(c, identity_automorphism(c)) == 0
    g = marker_to_code(golden, MarkerSystem.swap("100", "0101", "0", "1"))
    assert identify_power_of_shift(golden, g) is None


def test_orbit_permutation(golden):
    rs = ryan_system(golden, 1)
    d = rs.data
    ident = orbit_permutation_auto(golden, rs, {})
    assert ident.code.is_identity()
    g = orbit_permutation_auto(golden, rs, {d[0]: d[1], d[1]: d[0]})
    period = len(rs.marker) + rs.n
    for o in enumerate_per_k(golden, period):
        y = g.code.apply_point(EvPeriodicPoint.periodic(o.word))
        image = orbit_id(y.left, golden)
        if o == orbit_id(rs.marker + d[0], golden):
            assert image == orbit_id(rs.marker + d[1], golden)
        elif o == orbit_id(rs.marker + d[1], golden):
            assert image == orbit_id(rs.marker + d[0], golden)
        else:
            assert image == o
    cyc = orbit_permutation_auto(golden, rs, {d[0]: d[1], d[1]: d[2], d[2]: d[0]})
    assert cyc.order == 3
    from soficaut import certify_automorphism
    assert certify_automorphism(golden, cyc.code, order_bound=3).order == 3


def test_sync_length(golden, even):
    assert sync_length(golden, "10") == 1
    assert sync_length(even, "011") == 3


@pytest.mark.parametrize("w", FAMILY)
@pytest.mark.parametrize("u", FAMILY)
def test_prop31_family(golden, m01, w, u):
    if w == u:
        cert = prop31(golden, 2, m01, w, u)
        assert cert.case == "identity" and cert.verified
        return
    cert = prop31(golden, 2, m01, w, u)
    assert cert.case == "pair"
    assert cert.verified and len(cert.samples) >= 3
    assert cert.involution
    assert not self_overlaps(cert.choices["a"])
    g = cert.automorphism
    for o in enumerate_per_k(golden, 2):
        x = EvPeriodicPoint.periodic(o.word)
        assert orbit_id(g.code.apply_point(x).left, golden) == o


def test_prop31_choices_frozen(golden, m01):
    cert = prop31(golden, 2, m01, "10000", "10001")
    assert cert.choices == {"w": "10000", "u_tilde": "10001", "a": "10", "r": 5, "p": 1,
                            "c": 1, "v": "00000"}
    assert cert.automorphism.radius == 24


def test_prop31_small_radius_involution_exhaustive(golden, m01):
    # the marker-algebra certificate agrees with composing the rules
    cert = prop31(golden, 2, m01, "10000", "10001")
    g = cert.automorphism
    assert is_involution(golden, g, "marker")
    ms = MarkerSystem.from_json(cert.markers[0])
    assert validate_marker_system(golden, ms) is None


def test_prop31_family_case(golden, m01):
    cert = prop31(golden, 2, m01, "1000", "100010")
    assert cert.case == "family"
    assert [p["w"] for p in cert.choices["parts"]] == ["100000", "100001"]
    assert cert.verified


def test_prop31_errors(golden, even, m01):
    with pytest.raises(NotProper):
        prop31(golden, 2, m01, "00", "10000")
    with pytest.raises(NotProper):
        prop31(golden, 2, m01, "100", "10000")
    m1 = orbit_id("1", even)
    with pytest.raises(NeedWitness):
        prop31(even, 1, m1, "100", "101")


def test_conjugate_case(golden, m01):
    cert = _case2(golden, 2, m01, "10000", "10001", shift_automorphism(golden, 1), 16, 3, {})
    assert cert.case == "conjugate" and cert.verified


def test_minimality_witness(golden, m01):
    wit = minimality_witness(golden, 2, m01, "10001", "10000")
    assert wit.verified
    for point, ok in wit.checks:
        assert ok


def test_pingpong_trivial_cases(golden, m01):
    from soficaut import sample_cylinder
    assert pingpong_check(golden, 2, m01, "10000", "10001", 0).ok
    g = hyperbolic(golden, 2, m01, "10000", "100100")
    rep = pingpong([g, g], sample_cylinder(golden, 2, m01, "10000"), 3)
    assert not rep.ok and rep.violation == "g1 g2^-1"


def test_pingpong_short(golden, m01):
    rep = pingpong_check(golden, 2, m01, "10000", "10001", 2)
    assert rep.ok and rep.words_checked == 4 + 12


def test_hyperbolic_moves_deeper(golden, m01):
    from soficaut import dot_action, sample_cylinder
    g = hyperbolic(golden, 2, m01, "10000", "100100")
    y = sample_cylinder(golden, 2, m01, "10000")[0]
    seen = [y]
    for _ in range(3):
        y = dot_action(g, y)
        assert in_cylinder_m(y.point, "10000", m01, 2)
        assert y not in seen
        seen.append(y)


@pytest.mark.parametrize("ms", [
    MarkerSystem.swap("1010", "101010000", "1010", "1000"),
    MarkerSystem.swap("101010", "10101010000", "101010", "100010"),
])
def test_cylinder_shaped_involutions_exhaustive(golden, ms):
    # same shape as the cylinder maps (a^r, a^r w, swap a^r with a word
    # breaking the period) at radii where composing the rules is cheap
    g = marker_to_code(golden, ms)
    assert is_involution(golden, g, "exhaustive")
    assert is_involution(golden, g, "marker")


def test_marker_codes_multiply_like_permutations(golden):
    from itertools import permutations
    from soficaut import compose
    from soficaut.rules import rules_equal

    data = ("000", "001", "010", "100")
    perms = [dict(zip(data, p)) for p in permutations(data)][:8]
    for t in perms:
        for s in perms:
            ts = {d: t[s[d]] for d in data}
            g_t = marker_to_code(golden, MarkerSystem.from_perm("100", "0101", t))
            g_s = marker_to_code(golden, MarkerSystem.from_perm("100", "0101", s))
            g_ts = marker_to_code(golden, MarkerSystem.from_perm("100", "0101", ts))
            assert rules_equal(compose(g_t.code, g_s.code).rule, g_ts.code.rule)
