"""
Azema bundle of the maximum of the first jump time and a scaled second jump time
"""

import math
from scipy import integrate
from typing import Dict, Optional
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...exceptions import EnlargeNumericalException

# pdoc init
__pdoc__: Dict = {}


class MaxScaledBundle(JumpAzemaBundle):
    """
    Bundle of tau = T1 v a T2

    With K(t) = 1 - lam t exp(-lam t/a)/(1 - exp(-lam t)), Z = 1 - 1{T1 <= t} K(t)
    and dm = -K(t) dM on [0, T1], so that
    m = 1 + lam int_0^{t ^ T1} K(s) ds - 1{t >= T1} K(T1).
    Z~ is 1{T1 >= t} + 1{T1 < t}(1 - K(t)).

    Attributes:
        t1: first jump time
        t2: second jump time
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(MaxScaledBundle, self).__init__(spec, path)
        self.t1, self.t2 = self.first_jumps()
        self.__integral_t1: Optional[float] = None

    def k(self, t: float) -> float:
        """
        K(t), with K(0) = 0
        """
        if (t <= 0):
            return 0.0
        lam = self.model.lam
        return 1.0 - lam * t * math.exp(-lam * t / self.spec.a) / (-math.expm1(-lam * t))

    def integral(self, x: float) -> float:
        """
        int_0^x K(s) ds by adaptive quadrature
        """
        if (x <= 0):
            return 0.0
        if (x == self.t1 and self.__integral_t1 is not None):
            return self.__integral_t1
        value, error = integrate.quad(self.k, 0.0, x, epsabs=1e-12, epsrel=1e-12, limit=200)
        if (not math.isfinite(value) or error > 1e-9):
            raise EnlargeNumericalException("Quadrature of K did not converge", diagnostics={"x": x, "error": error})
        if (x == self.t1):
            self.__integral_t1 = value
        return value

    def z_at(self, t: float) -> float:
        return 1.0 - self.k(t) if t >= self.t1 else 1.0

    def z_left_at(self, t: float) -> float:
        return 1.0 - self.k(t) if t > self.t1 else 1.0

    def z_tilde_at(self, t: float) -> float:
        return self.z_left_at(t)

    def __m(self, t: float, first_jump_done: bool) -> float:
        value = 1.0 + self.model.lam * self.integral(min(t, self.t1))
        if (first_jump_done):
            value -= self.k(self.t1)
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
        nu^_t = -K(t) 1{N_{t-} = 0}
        """
        if (self.path.n_before(t) == 0):
            return -self.k(t)
        return 0.0

    def closed_form_z_tilde_tau(self) -> float:
        """
        Z~_tau = 1{T1 >= a T2} + 1{T1 < a T2}(1 - K(tau))
        """
        if (math.isinf(self.t1) or math.isinf(self.t2)):
            return float("nan")
        if (self.t1 >= self.spec.a * self.t2):
            return 1.0
        return 1.0 - self.k(self.spec.a * self.t2)

    def closed_form_z_tau(self) -> float:
        """
        Z_tau = lam tau exp(-lam tau/a)/(1 - exp(-lam tau)) = 1 - K(tau), below 1 on every path
        """
        if (math.isinf(self.t1) or math.isinf(self.t2)):
            return float("nan")
        return 1.0 - self.k(max(self.t1, self.spec.a * self.t2))
