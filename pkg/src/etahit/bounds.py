"""Exact big-integer evaluation of the hitting-set size recurrences."""

from __future__ import annotations

from functools import lru_cache


def _positive(**kw: int) -> None:
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


@lru_cache(maxsize=None)
def gamma_bound(c: int, d: int, h: int) -> int:
    """Restricted-hitting bound: ``2c`` at ``d = 1``, else
    ``2c * (h + (c+1)^(c+1) * gamma(c, d-1, h))``."""
    _positive(c=c, d=d, h=h)
    if d == 1:
        return 2 * c
    return 2 * c * (h + (c + 1) ** (c + 1) * gamma_bound(c, d - 1, h))


def phi_bound(c: int, h: int, t: int) -> int:
    """Cradle-packing bound ``t * gamma(c, c, h)``."""
    _positive(c=c, h=h, t=t)
    return t * gamma_bound(c, c, h)


@lru_cache(maxsize=None)
def psi_p5_bound(c: int) -> int:
    _positive(c=c)
    if c == 1:
        return 1
    return phi_bound(c, psi_p5_bound(c - 1), 2 * c + 1)


@lru_cache(maxsize=None)
def psi_sst_bound(c: int, s: int, t: int) -> int:
    _positive(c=c, s=s)
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return c**s
    if c == 1:
        return 1
    return t * psi_sst_bound(c - 1, s, t) + (s + 1) * psi_sst_bound(c, s, t - 1)


@lru_cache(maxsize=None)
def psi_ft_bound(c: int, t: int) -> int:
    _positive(c=c, t=t)
    if c == 1:
        return 1
    return 3 * (c + 1) ** (2 * t + 1) + 2 * t * psi_ft_bound(c - 1, t)


def lt_bound(c: int, t: int) -> int:
    """``c^(7t+7)`` for L_t-free graphs with clique number at most ``c``."""
    _positive(c=c, t=t)
    return c ** (7 * t + 7)


def star_bound(c: int, s: int) -> int:
    _positive(c=c, s=s)
    return c**s


def proper_p5_bound(c: int) -> int:
    _positive(c=c)
    return c**14
