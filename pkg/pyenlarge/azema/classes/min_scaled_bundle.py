"""
Azema bundle of the minimum of the first jump time and a scaled second jump time
"""

import math
from typing import Dict
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}


def min_scaled_g(beta: float, t: float) -> float:
    """
    g(t) = exp(-beta t)(beta t + 1), the probability of no point of a Poisson
    process of intensity beta within [0, t] after at most one
    """
    return math.exp(-beta * t) * (beta * t + 1.0)


def min_scaled_integral(beta: float, x: float) -> float:
    """
    I(x) = int_0^x g(s) ds = 2(1 - exp(-beta x))/beta - x exp(-beta x)
    """
    return 2.0 * (-math.expm1(-beta * x)) / beta - x * math.exp(-beta * x)


class MinScaledBundle(JumpAzemaBundle):
    """
    Bundle of tau = T1 ^ a T2

    With beta = lam (1/a - 1) and g(t) = exp(-beta t)(beta t + 1),
    Z = 1{T1 > t} g(t) and dm = -g(t) dM on [0, T1], so that
    m = 1 + lam I(t ^ T1) - 1{t >= T1} g(T1) with I the integral of g.

    Z~ is the left limit 1{T1 >= t} g(t) of Z. The martingale above
    compensates Z with a predictable process, so A° = m - Z has no atom
    at T1, while P(tau = T1 | F_T1) = exp(-beta T1).

    Attributes:
        beta: lam (1/a - 1)
        t1: first jump time
        t2: second jump time
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(MinScaledBundle, self).__init__(spec, path)
        self.beta = self.model.lam * (1.0 / spec.a - 1.0)
        self.t1, self.t2 = self.first_jumps()

    def g(self, t: float) -> float:
        return min_scaled_g(self.beta, t)

    def z_at(self, t: float) -> float:
        return self.g(t) if t < self.t1 else 0.0

    def z_left_at(self, t: float) -> float:
        return self.g(t) if t <= self.t1 else 0.0

    def z_tilde_at(self, t: float) -> float:
        return self.z_left_at(t)

    def __m(self, t: float, first_jump_done: bool) -> float:
        value = 1.0 + self.model.lam * min_scaled_integral(self.beta, min(t, self.t1))
        if (first_jump_done):
            value -= self.g(self.t1)
        return value

    def m_at(self, t: float) -> float:
        return self.__m(t, t >= self.t1)

    def m_left_at(self, t: float) -> float:
        return self.__m(t, t > self.t1)

    def a_opt_at(self, t: float) -> float:
        return self.m_at(t) - self.z_at(t)

    def a_opt_left_at(self, t: float) -> float:
        return self.m_left_at(t) - self.z_left_at(t)

    def nu_hat_at(self, t: float) -> float:
        """
        nu^_t = -g(t) 1{N_{t-} = 0}
        """
        if (self.path.n_before(t) == 0):
            return -self.g(t)
        return 0.0

    def closed_form_z_tilde_tau(self) -> float:
        """
        Z~_tau = g(tau), which is g(a T2) on {a T2 < T1}
        """
        if (math.isinf(self.t1) or math.isinf(self.t2)):
            return float("nan")
        return self.g(min(self.t1, self.spec.a * self.t2))

    def optional_atom_at_t1(self) -> float:
        """
        P(tau = T1 | F_T1) = exp(-beta T1), the atom of the dual optional
        projection at T1 that A° = m - Z does not carry
        """
        return math.exp(-self.beta * self.t1)
