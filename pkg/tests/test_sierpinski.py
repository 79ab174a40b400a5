"""Sierpinski graphs: construction cross-check and domination results."""

import pytest

from eocd.sierpinski import (
    sierpinski,
    sierpinski_eod_set,
    sierpinski_gamma_t,
    sierpinski_is_eocd,
)
from eocd.solver import find_eocd, gamma_t, is_ecd_set, is_eod_set


def test_base_cases():
    assert sierpinski(3, 0).n == 1
    s31 = sierpinski(3, 1)          # a triangle
    assert (s31.n, s31.m) == (3, 3)
    s32 = sierpinski(3, 2)
    assert (s32.n, s32.m) == (9, 12)


def test_labels_are_digit_strings():
    s = sierpinski(4, 2)
    assert s.labels[0] == "00"
    assert s.labels[6] == "12"
    assert s.labels[15] == "33"


def test_edge_counts():
    # m(S_p^n) follows from tripling-plus-linking: p * m(prev) + p*(p-1)/2
    for p, n in [(3, 3), (4, 2), (5, 2), (4, 3)]:
        s = sierpinski(p, n)
        m_prev = p * (p - 1) // 2
        for _ in range(n - 1):
            m_prev = p * m_prev + p * (p - 1) // 2
        assert s.m == m_prev


def test_extreme_vertices_have_low_degree():
    s = sierpinski(4, 2)
    # the four extreme vertices ii have degree p-1; all others p
    for v in range(s.n):
        expected = 3 if s.labels[v] in {"00", "11", "22", "33"} else 4
        assert s.degree(v) == expected


def test_vertex_cap():
    with pytest.raises(ValueError):
        sierpinski(10, 5, max_vertices=4096)


def test_explicit_eod_set_s42():
    d = sierpinski_eod_set(4, 2)
    s = sierpinski(4, 2)
    assert {s.labels[v] for v in d} == {"01", "10", "23", "32"}
    assert is_eod_set(s, d)


def test_explicit_eod_sets_even_cases():
    for p, n in [(4, 2), (6, 2), (4, 3), (8, 2)]:
        d = sierpinski_eod_set(p, n)
        assert len(d) == p ** (n - 1)


def test_parity_criterion_against_solver():
    for p, n, want in [(3, 2, False), (4, 2, True), (5, 2, False),
                       (6, 2, True), (3, 3, False), (4, 3, True)]:
        assert sierpinski_is_eocd(p, n) == want
        assert (find_eocd(sierpinski(p, n)) is not None) == want


def test_parity_criterion_domain():
    with pytest.raises(ValueError):
        sierpinski_is_eocd(2, 2)
    with pytest.raises(ValueError):
        sierpinski_is_eocd(4, 1)


def test_gamma_t_formula():
    assert sierpinski_gamma_t(4, 2) == 4
    assert sierpinski_gamma_t(6, 2) == 6
    assert sierpinski_gamma_t(4, 3) == 16
    assert gamma_t(sierpinski(4, 2)) == 4
    assert gamma_t(sierpinski(6, 2)) == 6


def test_odd_case_has_ecd_but_no_eod():
    # odd p still admits a perfect code; the open side is what fails
    s = sierpinski(3, 2)
    cert = find_eocd(s)
    assert cert is None
    from eocd.solver import find_ecd, find_eod
    p_set = find_ecd(s)
    assert p_set is not None and is_ecd_set(s, p_set)
    assert find_eod(s) is None
