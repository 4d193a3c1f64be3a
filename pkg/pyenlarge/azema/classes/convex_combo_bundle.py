"""
Azema bundle of a convex combination of the first two jump times
"""

import math
from typing import Dict
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}


class ConvexComboBundle(JumpAzemaBundle):
    """
    Bundle of tau = k1 T1 + k2 T2

    With c = lam k1/k2, Z = 1{T1 > t} + 1{T1 <= t < T2} exp(-c(t - T1)) and
    dm = -exp(-c(t - T1)) dM on ]T1, T2], so that
    m = 1 + (k2/k1)(1 - exp(-c((t ^ T2) - T1)^+)) - 1{t >= T2} exp(-c(T2 - T1)).
    A° is reconstructed as m - Z and is continuous.

    Attributes:
        rate: the decay rate c = lam k1/k2
        t1: first jump time
        t2: second jump time
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(ConvexComboBundle, self).__init__(spec, path)
        self.rate = self.model.lam * spec.k1 / spec.k2
        self.t1, self.t2 = self.first_jumps()

    def __decay(self, t: float) -> float:
        return math.exp(-self.rate * (t - self.t1))

    def z_at(self, t: float) -> float:
        if (t < self.t1):
            return 1.0
        if (t < self.t2):
            return self.__decay(t)
        return 0.0

    def z_left_at(self, t: float) -> float:
        if (t <= self.t1):
            return 1.0
        if (t <= self.t2):
            return self.__decay(t)
        return 0.0

    def __m(self, t: float, second_jump_done: bool) -> float:
        if (t <= self.t1):
            return 1.0
        u = min(t, self.t2)
        value = 1.0 + (self.spec.k2 / self.spec.k1) * (1.0 - self.__decay(u))
        if (second_jump_done):
            value -= self.__decay(self.t2)
        return value

    def m_at(self, t: float) -> float:
        return self.__m(t, t >= self.t2)

    def m_left_at(self, t: float) -> float:
        return self.__m(t, t > self.t2)

    def a_opt_at(self, t: float) -> float:
        return self.m_at(t) - self.z_at(t)

    def a_opt_left_at(self, t: float) -> float:
        return self.m_left_at(t) - self.z_left_at(t)

    def nu_hat_at(self, t: float) -> float:
        """
        nu^_t = -exp(-c(t - T1)) 1{N_{t-} = 1}
        """
        if (self.path.n_before(t) == 1):
            return -self.__decay(t)
        return 0.0

    def closed_form_z_tilde_tau(self) -> float:
        """
        Z~_tau = exp(-lam k1 (T2 - T1)), or nan when T2 is not on the path
        """
        if (math.isinf(self.t2)):
            return float("nan")
        return math.exp(-self.model.lam * self.spec.k1 * (self.t2 - self.t1))
