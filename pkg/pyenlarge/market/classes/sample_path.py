"""
Class definition for a simulated sample path
"""

import csv
import numpy as np
from typing import Dict, List, Optional
from .market_model import MarketModel
from ...exceptions import EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}

# csv header used for path exports
CSV_HEADER = ["path_id", "time", "S", "driver", "S_star", "Y"]


class SamplePath:
    """
    One realized trajectory of a market model

    Brownian paths live on a uniform grid. The driver is the cumulative
    Brownian motion W at the grid points, and `step_max`/`step_min` hold
    one Brownian-bridge extreme per step (each drawn from the exact
    conditional law given the two end points).

    Poisson paths are stored exactly: the grid is {0, T1, T2, ..., horizon},
    `s` holds the right-continuous values and `s_left` the left limits
    at the grid points. Any value between grid points is recovered from
    the closed form S_t = s0 exp(-lam psi t + ln(1+psi) N_t).

    Attributes:
        model: the MarketModel the path was generated from
        horizon: last time of the path
        grid: strictly increasing times
        s: price at grid points (right-continuous values)
        s_left: left limits of the price at grid points
        driver: W at grid points (Brownian) or N at grid points (Poisson)
        jump_times: jump times T1 < T2 < ... (empty for Brownian paths)
        s_star: running supremum of the price at grid points
        s_star_refined: running supremum including the bridge maxima (Brownian only)
        step_max: bridge maximum of S on each grid step (Brownian only)
        step_min: bridge minimum of S on each grid step (Brownian only)
        y: Y = mu t - N at grid points (Poisson only)
        seed: base seed of the random stream
        index: path index within its ensemble
    """

    def __init__(self,
                 model: MarketModel,
                 horizon: float,
                 grid: np.ndarray,
                 s: np.ndarray,
                 s_left: np.ndarray,
                 driver: np.ndarray,
                 s_star: np.ndarray,
                 seed: int,
                 index: int = 0,
                 jump_times: Optional[np.ndarray] = None,
                 s_star_refined: Optional[np.ndarray] = None,
                 step_max: Optional[np.ndarray] = None,
                 step_min: Optional[np.ndarray] = None,
                 y: Optional[np.ndarray] = None):
        # set values
        self.model = model
        self.horizon = float(horizon)
        self.grid = grid
        self.s = s
        self.s_left = s_left
        self.driver = driver
        self.s_star = s_star
        self.seed = seed
        self.index = index
        self.jump_times = np.zeros(0) if jump_times is None else jump_times
        self.s_star_refined = s_star_refined
        self.step_max = step_max
        self.step_min = step_min
        self.y = y

        # freeze arrays, paths are shared across threads
        for arr in [self.grid, self.s, self.s_left, self.driver, self.s_star, self.jump_times,
                    self.s_star_refined, self.step_max, self.step_min, self.y]:
            if (arr is not None):
                arr.setflags(write=False)

    @property
    def n_points(self) -> int:
        return len(self.grid)

    @property
    def dt(self) -> float:
        """
        Grid step of a Brownian path
        """
        if (len(self.grid) < 2):
            return 0.0
        return float(self.grid[1] - self.grid[0])

    # ------------------------------------------------------------------
    # Brownian accessors
    # ------------------------------------------------------------------
    def index_of(self, t: float) -> int:
        """
        Grid index of a grid time (Brownian paths)

        Args:
            t: a time on the grid

        Returns:
            the grid index

        Raises:
            pyenlarge.exceptions.EnlargeParameterException: t is not a grid time
        """
        if (len(self.grid) == 1):
            if (abs(t) > 1e-12):
                raise EnlargeParameterException("Time %s is not on the path grid" % (t))
            return 0
        i = int(round(t / self.dt))
        if (i < 0 or i >= len(self.grid) or abs(self.grid[i] - t) > 1e-9 * max(1.0, abs(t))):
            raise EnlargeParameterException("Time %s is not on the path grid" % (t))
        return i

    # ------------------------------------------------------------------
    # exact accessors for Poisson paths
    # ------------------------------------------------------------------
    def n_at(self, t: float) -> int:
        """
        Number of jumps in [0, t]
        """
        return int(np.searchsorted(self.jump_times, t, side="right"))

    def n_before(self, t: float) -> int:
        """
        Number of jumps in [0, t)
        """
        return int(np.searchsorted(self.jump_times, t, side="left"))

    def __price(self, t: float, n: int) -> float:
        m = self.model
        return float(m.s0 * np.exp(-m.lam * m.psi * t + m.alpha * n))

    def value_at(self, t: float) -> float:
        """
        Price at time t (right-continuous value)
        """
        if (self.model.is_brownian):
            return float(self.s[self.index_of(t)])
        return self.__price(t, self.n_at(t))

    def left_value_at(self, t: float) -> float:
        """
        Left limit of the price at time t
        """
        if (self.model.is_brownian):
            return float(self.s[self.index_of(t)])
        return self.__price(t, self.n_before(t))

    def sup_at(self, t: float) -> float:
        """
        Running supremum sup_{s <= t} S_s
        """
        if (self.model.is_brownian):
            return float(self.s_star[self.index_of(t)])
        k = int(np.searchsorted(self.grid, t, side="right")) - 1
        return max(float(self.s_star[k]), self.value_at(t))

    def sup_left_at(self, t: float) -> float:
        """
        Left limit of the running supremum, sup_{s < t} S_s (S_0 at t = 0)
        """
        if (t <= 0.0):
            return float(self.model.s0)
        if (self.model.is_brownian):
            # continuous paths
            return float(self.s_star[self.index_of(t)])
        k = int(np.searchsorted(self.grid, t, side="left")) - 1
        return max(float(self.s_star[k]), self.left_value_at(t))

    def y_at(self, t: float) -> float:
        """
        Y_t = mu t - N_t
        """
        return float(self.model.mu * t - self.n_at(t))

    def y_left_at(self, t: float) -> float:
        """
        Y_{t-} = mu t - N_{t-}
        """
        return float(self.model.mu * t - self.n_before(t))

    def next_jump_after(self, t: float) -> Optional[float]:
        """
        First jump time strictly after t, or None when there is none before the horizon
        """
        k = self.n_at(t)
        if (k < len(self.jump_times)):
            return float(self.jump_times[k])
        return None

    def segments(self, t_start: float, t_end: float) -> List[tuple]:
        """
        Split ]t_start, t_end] into jump-free open segments of a Poisson path

        Returns:
            list of (a, b, jump_at_b) tuples where the path has no jump in ]a, b[
            and jump_at_b tells whether b is a jump time
        """
        out = []
        a = t_start
        for tj in self.jump_times[(self.jump_times > t_start) & (self.jump_times <= t_end)]:
            out.append((a, float(tj), True))
            a = float(tj)
        if (a < t_end):
            out.append((a, t_end, False))
        return out

    # ------------------------------------------------------------------
    # export
    # ------------------------------------------------------------------
    def csv_rows(self) -> List[List]:
        """
        Rows for the long format path CSV (left limit rows are written
        before the right value rows at jump times)

        Returns:
            list of rows matching CSV_HEADER
        """
        rows = []
        for i in range(0, len(self.grid)):
            y_value = "" if self.y is None else repr(float(self.y[i]))
            if (self.model.is_poisson and self.s_left[i] != self.s[i]):
                star_left = self.sup_left_at(float(self.grid[i]))
                y_left = repr(float(self.y[i]) + 1.0)
                rows.append([self.index, repr(float(self.grid[i])), repr(float(self.s_left[i])),
                             repr(float(self.driver[i]) - 1.0), repr(star_left), y_left])
            rows.append([self.index, repr(float(self.grid[i])), repr(float(self.s[i])),
                         repr(float(self.driver[i])), repr(float(self.s_star[i])), y_value])
        return rows

    def to_csv(self, filename: str) -> None:
        """
        Write the path to a CSV file

        Args:
            filename: output filename
        """
        with open(filename, "w", newline="") as fp:
            writer = csv.writer(fp)
            writer.writerow(CSV_HEADER)
            writer.writerows(self.csv_rows())

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of SamplePath object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of SamplePath object
        """
        return "%s(model=%s, horizon=%s, n_points=%d, n_jumps=%d, seed=%d, index=%d)" % (
            self.__class__.__name__,
            repr(self.model),
            repr(self.horizon),
            len(self.grid),
            len(self.jump_times),
            self.seed,
            self.index,
        )
