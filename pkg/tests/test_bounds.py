import pytest

from etahit.bounds import (
    gamma_bound,
    lt_bound,
    phi_bound,
    proper_p5_bound,
    psi_ft_bound,
    psi_p5_bound,
    psi_sst_bound,
    star_bound,
)


def gamma_ref(c, d, h):
    # the recurrence unrolled iteratively
    value = 2 * c
    for _ in range(d - 1):
        value = 2 * c * (h + (c + 1) ** (c + 1) * value)
    return value


@pytest.mark.parametrize("c,d,h,expected", [(2, 1, 1, 4), (2, 2, 1, 436), (5, 1, 9, 10)])
def test_gamma_golden(c, d, h, expected):
    assert gamma_bound(c, d, h) == expected


@pytest.mark.parametrize("c", range(1, 6))
@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("h", [1, 3, 50])
def test_gamma_matches_unrolled(c, d, h):
    assert gamma_bound(c, d, h) == gamma_ref(c, d, h)


def test_phi_and_psi_p5():
    assert psi_p5_bound(1) == 1
    assert phi_bound(2, 1, 5) == 2180
    assert psi_p5_bound(2) == 2180
    assert psi_p5_bound(3) == phi_bound(3, 2180, 7)
    assert psi_p5_bound(3) == 7 * gamma_ref(3, 3, 2180) == 239818152
    assert psi_p5_bound(4) == 9 * gamma_ref(4, 4, 239818152) == 10793373529940506944
    assert psi_p5_bound(5) > 2**64


def test_psi_sst():
    assert psi_sst_bound(2, 1, 1) == 5
    for c in range(1, 6):
        for s in range(1, 4):
            assert psi_sst_bound(c, s, 0) == c**s


@pytest.mark.parametrize("c", range(1, 9))
@pytest.mark.parametrize("s", range(1, 4))
def test_psi_sst_one_isolated_vertex_bound(c, s):
    assert psi_sst_bound(c, s, 1) <= c ** (2 * s + 1)


def test_psi_ft():
    assert psi_ft_bound(1, 3) == 1
    assert psi_ft_bound(2, 1) == 83
    assert psi_ft_bound(3, 1) == 3 * 4**3 + 2 * 83


def test_power_bounds():
    assert lt_bound(2, 1) == 2**14
    assert star_bound(3, 3) == 27
    assert proper_p5_bound(2) == 2**14


@pytest.mark.parametrize("fn,args", [(gamma_bound, (0, 1, 1)), (psi_p5_bound, (0,)), (psi_sst_bound, (1, 1, -1)), (psi_ft_bound, (1, 0)), (lt_bound, (0, 1))])
def test_rejects_bad_parameters(fn, args):
    with pytest.raises(ValueError):
        fn(*args)
