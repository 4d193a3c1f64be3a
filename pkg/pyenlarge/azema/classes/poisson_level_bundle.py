"""
Azema bundle of the Poisson last passage time at a level
"""

from typing import Dict
from .jump_azema_bundle import JumpAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...random_times.random_times import poisson_level_visits
from ...special_functions import ruin_table

# pdoc init
__pdoc__: Dict = {}

# relative distance below which Y is taken to sit on the level
LEVEL_SNAP = 1e-9


class PoissonLevelBundle(JumpAzemaBundle):
    """
    Bundle of tau = sup{t : S_t >= b s0} with psi > 0, written with the
    level a = -ln(b)/ln(1+psi) of Y = mu t - N

    Z = Psi(Y - a) 1{Y >= a} + 1{Y < a} where Psi is the ruin probability.
    Y reaches a only from below and continuously, and every visit is an
    atom of A° of size 1 - Psi(0) = theta/(1+theta).

    Attributes:
        level_a: the level a of Y
        rho: Psi(0) = 1/(1+theta)
        visits: visit times of Y to the level
        last_visit: the last of the visits, None without visits
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(PoissonLevelBundle, self).__init__(spec, path)
        self.level_a = spec.level_a(path.model)
        self.ruin = ruin_table(self.model.theta)
        self.rho = float(self.ruin(0.0))
        self.visits = poisson_level_visits(spec, path)
        self.last_visit = float(self.visits[-1]) if len(self.visits) > 0 else None
        self.set_a_opt_atoms([(float(t), 1.0 - self.rho, 0.0) for t in self.visits])

    def __distance(self, y: float) -> float:
        d = y - self.level_a
        if (abs(d) <= LEVEL_SNAP * max(1.0, abs(self.level_a))):
            return 0.0
        return d

    def settled_at(self, t: float) -> bool:
        """
        Whether t comes after the last visit of a path ending above the
        level, where Y > a holds without a visit to snap to

        Args:
            t: time

        Returns:
            True after the last visit of such a path
        """
        return (self.last_visit is not None and t > self.last_visit and self.path.y[-1] >= self.level_a)

    def z_of(self, y: float, left: bool = False, settled: bool = False) -> float:
        """
        Z as a function of Y. Left limits approach the level from below,
        so that Z_{t-} = 1 at a visit.

        Args:
            y: value of Y (or of Y_{t-} when left is True)
            left: evaluate a left limit
            settled: Y is known to lie above the level, as after the last visit

        Returns:
            the value of Z
        """
        d = self.__distance(y)
        if (settled is True):
            return float(self.ruin(max(d, 0.0)))
        if (d > 0 or (d == 0 and left is False)):
            return float(self.ruin(d))
        return 1.0

    def z_at(self, t: float) -> float:
        return self.z_of(self.path.y_at(t), settled=self.settled_at(t))

    def z_left_at(self, t: float) -> float:
        return self.z_of(self.path.y_left_at(t), left=True, settled=self.settled_at(t))

    def nu_hat_at(self, t: float) -> float:
        """
        nu^_t = Z(Y_{t-} - 1) - Z(Y_{t-})
        """
        y_left = self.path.y_left_at(t)
        if (self.path.n_at(t) > self.path.n_before(t)):
            # same evaluation as Z_t, so that nu^ is the jump of m bit for bit
            after = self.z_at(t)
        else:
            after = self.z_of(y_left - 1.0)
        return after - self.z_left_at(t)
