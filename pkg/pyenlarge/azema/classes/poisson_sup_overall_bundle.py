"""
Azema bundle of the time of the overall supremum of a Poisson price
"""

from typing import Dict
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...special_functions import overall_sup_survival, overall_sup_at_most_one, overall_sup_strict

# pdoc init
__pdoc__: Dict = {}


class PoissonSupOverallBundle(JumpAzemaBundle):
    """
    Bundle of tau = sup{t : S_t = S*_t}, with Z = P(sup S > x) at
    x = S*_t/S_t in closed form.

    With psi > 0, Z = Psi_ruin(ln(S*/S)/ln(1+psi)), A° has the atom
    theta/(1+theta) at 0 and at every record. With psi < 0, Z = S/S* and
    A° has an atom -psi at every jump taken from the running maximum.

    Attributes:
        record_atom: size of the atoms of A°
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(PoissonSupOverallBundle, self).__init__(spec, path)
        psi = self.model.psi
        if (psi > 0):
            self.record_atom = overall_sup_at_most_one(self.model)
        else:
            self.record_atom = float(overall_sup_strict(self.model, 1.0 / (1.0 + psi)))
        atoms = [(0.0, self.record_atom, 0.0)] if psi > 0 else []
        for t in self.path.jump_times:
            s_left, s_right, star_left = self.left_state(float(t))
            if ((psi > 0 and s_right > star_left) or (psi < 0 and s_left >= star_left)):
                atoms.append((float(t), self.record_atom, 0.0))
        self.set_a_opt_atoms(atoms)

    def __survival(self, x: float) -> float:
        return float(overall_sup_survival(self.model, max(x, 1.0)))

    def z_at(self, t: float) -> float:
        return self.__survival(self.path.sup_at(t) / self.path.value_at(t))

    def z_left_at(self, t: float) -> float:
        if (t <= 0.0):
            return 1.0
        return self.__survival(self.path.sup_left_at(t) / self.path.left_value_at(t))

    def nu_hat_at(self, t: float) -> float:
        """
        nu^_t = Z after a jump at t - Z_{t-} + the atom of A° such a jump creates
        """
        psi = self.model.psi
        s_left, s_right, star_left = self.left_state(t)
        value = self.__survival(star_left / s_right) - self.__survival(star_left / s_left)
        if ((psi > 0 and s_right > star_left) or (psi < 0 and s_left >= star_left)):
            value += self.record_atom
        return value
