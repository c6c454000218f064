import pytest

from monostab.core import MonomialIdeal, MonomialPrime
from monostab.constructions import make_H, make_J, make_paper_ideal, make_triangle
from monostab.errors import CapacityError
from monostab.stability import (
    build_profile,
    check_index_inequalities,
    detect_astab,
    detect_vstab,
    detect_vstab_p,
    dumps,
    format_line,
    profile_entry,
    profile_table,
    profile_to_dict,
)

from conftest import XY

X = MonomialIdeal(XY, [(1, 0)])
M = MonomialPrime((0, 1))


def test_profile_H1_values():
    assert build_profile(make_H(1), 3).v_values() == [2, 5, 8]


def test_profile_triangle_ass_sizes():
    p = build_profile(make_triangle(1), 3)
    assert [len(a) for a in p.ass_sets()] == [3, 4, 4]


def test_profile_principal():
    p = build_profile(X, 4)
    assert p.v_values() == [0, 1, 2, 3]
    assert all(a == {MonomialPrime((0,))} for a in p.ass_sets())


def test_profile_entries_independent():
    p = build_profile(make_triangle(1), 4)
    for k in (1, 3, 4):
        e = profile_entry(make_triangle(1), k)
        assert e.ideal == p.entry(k).ideal
        assert e.ass == p.entry(k).ass
        assert e.v == p.entry(k).v


def test_profile_capacity():
    with pytest.raises(CapacityError) as exc:
        build_profile(make_triangle(1), 6, cap=12)
    assert exc.value.k == 4


def test_profile_rejects_bad_horizon():
    with pytest.raises(ValueError):
        build_profile(make_H(1), 0)


def test_detect_astab_examples():
    for b in (1, 2, 3):
        assert detect_astab(build_profile(make_H(b), b + 3)).index == 1
    two = build_profile(make_J(3), 5)
    est = detect_astab(two)
    assert est.index == 3 and est.ascending
    assert detect_astab(build_profile(MonomialIdeal(XY, [(1, 0), (0, 1)]), 4)).index == 1


def test_detect_vstab_examples():
    est = detect_vstab(build_profile(make_H(3), 7))
    assert (est.index, est.line) == (3, (7, -1))
    est = detect_vstab(build_profile(make_triangle(1), 4))
    assert (est.index, est.line) == (1, (2, -1))
    est = detect_vstab(build_profile(X, 4))
    assert (est.index, est.line) == (1, (1, -1))


def test_detect_vstab_p_examples():
    est = detect_vstab_p(build_profile(make_H(2), 6), M)
    assert (est.index, est.line) == (2, (5, -1))
    est = detect_vstab_p(build_profile(make_triangle(1), 5), MonomialPrime((0, 1, 2)))
    assert (est.index, est.line) == (2, (2, -1))
    est = detect_vstab_p(build_profile(X, 4), MonomialPrime((0,)))
    assert (est.index, est.line) == (1, (1, -1))


def test_vstab_p_not_associated_is_inconclusive():
    est = detect_vstab_p(build_profile(X, 4), M)
    assert not est.conclusive and est.index is None


def test_inconclusive_when_tail_too_short():
    # H(3) stabilizes at k = 3; a horizon of 4 leaves a tail of length 2 < window + 1
    est = detect_vstab(build_profile(make_H(3), 4), window=2)
    assert not est.conclusive
    assert est.to_dict()["conclusive"] is False


def test_window_validation():
    p = build_profile(make_H(1), 3)
    with pytest.raises(ValueError):
        detect_astab(p, window=3)
    with pytest.raises(ValueError):
        detect_vstab(p, window=0)


def test_certification_needs_expected():
    p = build_profile(make_H(2), 6)
    assert not detect_vstab(p).certified
    assert detect_vstab(p, expected=2).certified
    assert not detect_vstab(p, expected=3).certified


def test_inequalities_H2():
    r = check_index_inequalities(build_profile(make_H(2), 6))
    assert r.satisfied
    assert r.astab.index == 1 and r.vstab.index == 2
    assert max(e.index for e in r.vstab_p) == 2


def test_inequalities_triangle():
    r = check_index_inequalities(build_profile(make_triangle(1), 5))
    assert r.astab.index == 2
    assert r.upper_ok and r.satisfied


def test_inequalities_paper_2_1():
    r = check_index_inequalities(build_profile(make_paper_ideal(2, 1), 5))
    assert (r.astab.index, r.vstab.index) == (2, 1)
    assert r.upper_ok and r.lower_ok


def test_larger_horizon_keeps_index():
    for k_max in (6, 7, 8):
        p = build_profile(make_H(2), k_max)
        assert detect_vstab(p).index == 2
        assert detect_astab(p).index == 1


def test_slope_is_alpha():
    for ideal in (make_H(1), make_H(2), make_triangle(1), make_J(3)):
        p = build_profile(ideal, 6)
        est = detect_vstab(p)
        assert est.conclusive and est.line[0] == p.alpha


def test_ascending_chain_edge_ideals():
    for ideal in (make_triangle(1), make_J(3)):
        assert detect_astab(build_profile(ideal, 5)).ascending


def test_min_of_linear_consistency():
    p = build_profile(make_paper_ideal(2, 1), 5)
    a = detect_astab(p).index
    for e in p.entries[a - 1:]:
        assert e.v.value == min(e.v.per_prime[q] for q in e.ass)


def test_format_line():
    assert format_line((5, -1)) == "5k-1"
    assert format_line((3, 1)) == "3k+1"
    assert format_line((2, 0)) == "2k"


def test_table_and_json():
    p = build_profile(make_H(2), 6)
    text = profile_table(p, detect_astab(p), detect_vstab(p))
    assert text.splitlines()[-1] == "astab=1 vstab=2 line=5k-1"
    d = profile_to_dict(p)
    assert d["horizon"] == 6 and d["entries"][1]["v"]["v"] == 9
    assert dumps(d) == dumps(profile_to_dict(build_profile(make_H(2), 6)))
