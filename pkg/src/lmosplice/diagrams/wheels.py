"""Wheels element Omega, the constant omega = <Omega, Omega>, and named elements."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import named
from .element import Element, pair
from .space import Space


@lru_cache(maxsize=None)
def modified_bernoulli(m_max: int) -> tuple:
    """``(b_2, b_4, ..., b_{2 m_max})`` from ``sum b_2m X^2m = 1/2 log(sinh(X/2)/(X/2))``."""
    # series in Y = X^2
    u = [Fraction(1, 4 ** n * factorial(2 * n + 1)) for n in range(m_max + 1)]
    u[0] = Fraction(0)
    log = [Fraction(0)] * (m_max + 1)
    power = [Fraction(1)] + [Fraction(0)] * m_max
    for k in range(1, m_max + 1):
        power = [sum(power[i] * u[n - i] for i in range(n + 1)) for n in range(m_max + 1)]
        for n in range(m_max + 1):
            log[n] += Fraction((-1) ** (k + 1), k) * power[n]
    return tuple(log[m] / 2 for m in range(1, m_max + 1))


def wheel(space: Space, n: int, color: str) -> Element:
    return Element.of(space, named.wheel(n, color))


def theta(space: Space) -> Element:
    return Element.of(space, named.theta())


def theta2(space: Space) -> Element:
    return Element.of(space, named.theta2())


def t1(space: Space, color: str) -> Element:
    return Element.of(space, named.t1(color))


def omega_big(space: Space, color: str) -> Element:
    """``Omega = exp(sum_m b_2m w_2m)`` truncated at the space's cap."""
    bs = modified_bernoulli(max(space.cap // 2, 1))
    log = Element(space)
    for m in range(1, space.cap // 2 + 1):
        log = log + wheel(space, 2 * m, color).scale(bs[m - 1])
    return log.exp()


_AUX = "_w"


def omega_small(space: Space, color: str | None = None) -> Element:
    """``omega = <Omega, Omega>``, an element of the closed part of ``space``."""
    color = color or (space.colors[0] if space.colors else _AUX)
    big = omega_big(space, color)
    return pair(big, big, {color})
