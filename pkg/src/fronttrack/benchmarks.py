"""Closed-form solutions used as oracles.

Each factory returns an AnalyticSolution whose ``eval`` is vectorized in x,
whose ``interface`` gives the support boundary s(t), and whose params record
the defining constants.  Solutions are clamped to zero outside the support.
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidSpec


@dataclass(frozen=True)
class AnalyticSolution:
    """A closed-form solution with its interface trajectory."""

    eval: Callable          # (x, t) -> u, vectorized in x
    interface: Callable     # t -> s(t)
    params: dict = field(default_factory=dict)
    interface_speed: Callable | None = None   # t -> ds/dt where available
    extinction_time: float | None = None
    turning_time: float | None = None         # interior argmax of s(t), if any


def barenblatt(n: float) -> AnalyticSolution:
    """Self-similar source solution of du/dt = d2(u^n)/dx2, n > 1.

    u(x, t) = (1/s) [1 - (x/s)^2]^(1/(n-1)) inside |x| < s(t),
    s(t) = [2n(n+1)/(n-1) * (t+1)]^(1/(n+1)).
    """
    if n <= 1:
        raise InvalidSpec(f"barenblatt needs n > 1, got {n}")
    K = 2.0 * n * (n + 1.0) / (n - 1.0)
    ex = 1.0 / (n + 1.0)
    q = 1.0 / (n - 1.0)

    def interface(t):
        return (K * (np.asarray(t, dtype=float) + 1.0)) ** ex

    def evaluate(x, t):
        s = interface(t)
        z = 1.0 - (np.asarray(x, dtype=float) / s) ** 2
        return np.maximum(z, 0.0) ** q / s

    def speed(t):
        # d/dt of [K(t+1)]^(1/(n+1))
        return ex * K * (K * (np.asarray(t, dtype=float) + 1.0)) ** (ex - 1.0)

    return AnalyticSolution(eval=evaluate, interface=interface,
                            params={"n": n}, interface_speed=speed)


def kersner(p: float, C0: float = 1.0, alpha: float = 1.0, L0: float = 1.0) -> AnalyticSolution:
    """Adsorption solution of du/dt = d2(u^p)/dx2 - C0 u^(2-p), 1 < p < 2.

    u = a(t)^(-q) [A a(t)^(2/(p+1)) - B a(t)^2 - x^2]_+^q with
    a(t) = (2p(p+1)/(p-1)) t + (p-1) alpha,  q = 1/(p-1),
    A = [C0 (p-1)^4 alpha^2 + 4 p^2 L0^2] / (4 p^2 ((p-1) alpha)^(2/(p+1))),
    B = C0 (p-1)^2 / (4 p^2).

    The support radius s(t)^2 = A a^(2/(p+1)) - B a^2 rises to an interior
    maximum before shrinking to extinction; both times follow in closed form
    from the a-roots of d(s^2)/da = 0 and s^2 = 0.
    """
    if not (1.0 < p < 2.0):
        raise InvalidSpec(f"kersner needs 1 < p < 2, got {p}")
    if C0 <= 0 or alpha <= 0 or L0 <= 0:
        raise InvalidSpec("kersner needs C0 > 0, alpha > 0, L0 > 0")
    q = 1.0 / (p - 1.0)
    e = 2.0 / (p + 1.0)
    A = (C0 * (p - 1.0) ** 4 * alpha**2 + 4.0 * p * p * L0**2) \
        / (4.0 * p * p * ((p - 1.0) * alpha) ** e)
    B = C0 * (p - 1.0) ** 2 / (4.0 * p * p)
    rate = 2.0 * p * (p + 1.0) / (p - 1.0)
    a0 = (p - 1.0) * alpha

    def a_of(t):
        return rate * np.asarray(t, dtype=float) + a0

    def support_sq(t):
        a = a_of(t)
        return A * a**e - B * a * a

    # s^2 = 0 at a_e; d(s^2)/da = 0 at a_m (both > a(0) for admissible data)
    a_extinct = (A / B) ** (1.0 / (2.0 - e))
    a_turn = (A * e / (2.0 * B)) ** (1.0 / (2.0 - e))
    t_extinct = (a_extinct - a0) / rate
    t_turn = (a_turn - a0) / rate

    def interface(t):
        return np.sqrt(np.maximum(support_sq(t), 0.0))

    def evaluate(x, t):
        a = a_of(t)
        z = A * a**e - B * a * a - np.asarray(x, dtype=float) ** 2
        return np.maximum(z, 0.0) ** q * a ** (-q)

    def speed(t):
        a = a_of(t)
        ds2_da = A * e * a ** (e - 1.0) - 2.0 * B * a
        s = interface(t)
        return np.where(s > 0, 0.5 * ds2_da * rate / np.where(s > 0, s, 1.0), 0.0)

    return AnalyticSolution(eval=evaluate, interface=interface,
                            params={"p": p, "C0": C0, "alpha": alpha, "L0": L0},
                            interface_speed=speed,
                            extinction_time=float(t_extinct) if t_extinct > 0 else None,
                            turning_time=float(t_turn) if t_turn > 0 else None)


def turbulent() -> AnalyticSolution:
    """Closed-form solution of du/dt = d2(u^1.5)/dx2 - u^1.5 + u^0.5.

    u(x, t) = (a(t)^2 + 1) [(1 - cosh(x/3)/sqrt(a(t)^-2 + 1))_+]^2 with
    a(t) = 2(1+sqrt2) e^(-5t/6) / ((1+sqrt2)^2 - e^(-5t/3)), and the
    interface s(t) = 3 ln(sqrt(a^-2 + 1) + 1/a) advances at the constant
    speed 5/2 (the transformed slope at the front is identically -1/3).
    """
    c = 1.0 + np.sqrt(2.0)

    def a_of(t):
        t = np.asarray(t, dtype=float)
        return 2.0 * c * np.exp(-5.0 * t / 6.0) / (c * c - np.exp(-5.0 * t / 3.0))

    def interface(t):
        a = a_of(t)
        return 3.0 * np.log(np.sqrt(a ** (-2.0) + 1.0) + 1.0 / a)

    def evaluate(x, t):
        a = a_of(t)
        bracket = 1.0 - np.cosh(np.asarray(x, dtype=float) / 3.0) / np.sqrt(a ** (-2.0) + 1.0)
        return (a * a + 1.0) * np.maximum(bracket, 0.0) ** 2

    def speed(t):
        return np.full_like(np.asarray(t, dtype=float), 2.5)

    return AnalyticSolution(eval=evaluate, interface=interface,
                            params={"n": 1.5, "m": 0.5, "c0": 1.0},
                            interface_speed=speed)
