"""
Azema bundle of the time of the supremum on [0, 1] of a Poisson price
"""

import math
from typing import Dict, Optional, Tuple
from .. import FORM_ESTIMATED
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...special_functions import (DEFAULT_SAMPLE_SIZE,
                                  SUP_KIND_FINITE_HORIZON,
                                  SUP_KIND_STRICT_PRE_HORIZON,
                                  SUP_KIND_AT_MOST_ONE,
                                  sup_law_estimator)
from ...special_functions.classes.sup_law_estimator import SupLawEstimator
from ...exceptions import EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}


class PoissonSupUnitBundle(JumpAzemaBundle):
    """
    Bundle of tau = sup{t <= 1 : S_t = S*_t}

    Z_t = 1{t < 1} Psi(S*_t/S_t, 1 - t) with Psi(x, s) = P(sup_{r <= s} S_r > x)
    for a price started at 1, read from a Monte-Carlo table.

    With psi > 0 the supremum is reached at jumps (records). A° has the
    atom Phi^(1) = P(tau = 0) at 0 and an atom Phi^(1 - T) at every record
    T, Phi^(s) being the probability of no new record within s.

    With psi < 0 the supremum is a left limit at the jumps taken from the
    running maximum. A° has an atom Phi~(1/(1+psi), 1 - T) at every such
    jump, Phi~(x, s) = P(sup_{r < s} S_r < x), and an atom 1{S_1 = S*_1}
    at maturity.

    Attributes:
        survival: Psi(x, s)
        strict: Phi~(x, s)
        at_most_one: Phi^(s)
    """
    form = FORM_ESTIMATED

    def __init__(self,
                 spec: RandomTimeSpec,
                 path: SamplePath,
                 estimator: Optional[SupLawEstimator] = None,
                 sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                 seed: Optional[int] = 0):
        super(PoissonSupUnitBundle, self).__init__(spec, path)
        if (path.horizon < 1.0 - 1e-12):
            raise EnlargeParameterException("The supremum time on [0, 1] needs paths reaching t = 1")
        if (estimator is None):
            estimator = sup_law_estimator(self.model, SUP_KIND_FINITE_HORIZON, sample_size=sample_size, seed=seed)
        self.survival = estimator.with_kind(SUP_KIND_FINITE_HORIZON)
        self.strict = estimator.with_kind(SUP_KIND_STRICT_PRE_HORIZON)
        self.at_most_one = estimator.with_kind(SUP_KIND_AT_MOST_ONE)
        self.set_a_opt_atoms(self.__atoms())

    def __atoms(self) -> list:
        psi = self.model.psi
        atoms = []
        if (psi > 0):
            p, se = self.at_most_one.evaluate(t=1.0)
            atoms.append((0.0, p, se))
        for t in self.path.jump_times[self.path.jump_times <= 1.0]:
            t = float(t)
            s_left, s_right, star_left = self.left_state(t)
            if (psi > 0 and s_right > star_left):
                p, se = self.at_most_one.evaluate(t=1.0 - t)
                atoms.append((t, p, se))
            elif (psi < 0 and s_left >= star_left):
                p, se = self.strict.evaluate(x=1.0 / (1.0 + psi), t=1.0 - t)
                atoms.append((t, p, se))
        if (psi < 0 and self.path.value_at(1.0) >= self.path.sup_at(1.0)):
            atoms.append((1.0, 1.0, 0.0))
        return atoms

    def __psi(self, x: float, remaining: float) -> Tuple[float, float]:
        return self.survival.evaluate(x=max(x, 1.0), t=remaining)

    def z_at(self, t: float) -> float:
        if (t >= 1.0):
            return 0.0
        return self.__psi(self.path.sup_at(t) / self.path.value_at(t), 1.0 - t)[0]

    def z_left_at(self, t: float) -> float:
        if (t <= 0.0):
            return 1.0
        if (t > 1.0):
            return 0.0
        ratio = self.path.sup_left_at(t) / self.path.left_value_at(t)
        if (t == 1.0):
            # a price at its running maximum just before maturity still makes a new one when psi < 0
            return 1.0 if (self.model.psi < 0 and ratio <= 1.0) else 0.0
        return self.__psi(ratio, 1.0 - t)[0]

    def z_se_at(self, t: float) -> float:
        if (t >= 1.0):
            return 0.0
        return self.__psi(self.path.sup_at(t) / self.path.value_at(t), 1.0 - t)[1]

    def __nu_hat_terms(self, t: float) -> list:
        psi = self.model.psi
        remaining = 1.0 - t
        s_left, s_right, star_left = self.left_state(t)
        after = self.__psi(star_left / s_right, remaining)
        before = self.__psi(star_left / s_left, remaining)
        terms = [after, (-before[0], before[1])]
        if (psi > 0 and s_right > star_left):
            terms.append(self.at_most_one.evaluate(t=remaining))
        elif (psi < 0 and s_left >= star_left):
            terms.append(self.strict.evaluate(x=1.0 / (1.0 + psi), t=remaining))
        return terms

    def nu_hat_at(self, t: float) -> float:
        """
        nu^_t = Psi(S*_{t-}/S_t, 1-t) - Psi(S*_{t-}/S_{t-}, 1-t) plus the
        atom of A° a jump at t would create
        """
        if (t >= 1.0):
            return 0.0
        return sum([term[0] for term in self.__nu_hat_terms(t)])

    def nu_hat_se_at(self, t: float) -> float:
        if (t >= 1.0):
            return 0.0
        return math.sqrt(sum([term[1]**2 for term in self.__nu_hat_terms(t)]))

    def literal_a_opt_mismatch(self) -> float:
        """
        Difference between A°_1 written with the atom 1{S*_1 = S_0} at
        maturity and A°_1 written with the atom Phi^(1) at 0 (psi > 0 only).
        Both give the same expectation, they differ pathwise.

        Returns:
            1{S*_1 = S_0} - Phi^(1), 0 when psi < 0
        """
        if (self.model.psi < 0):
            return 0.0
        no_record = 1.0 if self.path.sup_at(1.0) <= self.model.s0 else 0.0
        return no_record - self.at_most_one.evaluate(t=1.0)[0]
