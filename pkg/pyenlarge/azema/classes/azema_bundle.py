"""
Base class of the Azema bundles
"""

import csv
import numpy as np
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence
from .. import FORM_ANALYTIC, AZEMA_CSV_HEADER
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}


class AzemaBundle(ABC):
    """
    Evaluators of Z, Z~, A° and m = Z + A° along one sample path

    Values at a time t are the right-continuous ones. The `*_left_at`
    accessors return left limits, and Z~ = m - A°_- = Z + dA° is built from
    them. Subclasses provide Z and A° (or m) in closed form for one
    random time kind.

    Attributes:
        spec: the RandomTimeSpec
        path: the SamplePath
        model: the MarketModel of the path
        form: "analytic", "estimated" or "local_time"
    """
    form: str = FORM_ANALYTIC

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        spec.check_model(path.model)
        self.spec = spec
        self.path = path
        self.model = path.model

    @property
    def kind(self) -> str:
        return self.spec.kind

    @abstractmethod
    def z_at(self, t: float) -> float:
        """
        Z_t = P(tau > t | F_t)
        """

    @abstractmethod
    def z_left_at(self, t: float) -> float:
        """
        Left limit Z_{t-}
        """

    @abstractmethod
    def a_opt_at(self, t: float) -> float:
        """
        Dual optional projection A°_t of 1{tau <= t}
        """

    @abstractmethod
    def a_opt_left_at(self, t: float) -> float:
        """
        Left limit A°_{t-}, with A°_{0-} = 0
        """

    @abstractmethod
    def default_times(self) -> np.ndarray:
        """
        Times used by `series` when none are given
        """

    def m_at(self, t: float) -> float:
        """
        Martingale m_t = Z_t + A°_t
        """
        return self.z_at(t) + self.a_opt_at(t)

    def m_left_at(self, t: float) -> float:
        """
        Left limit m_{t-}
        """
        return self.z_left_at(t) + self.a_opt_left_at(t)

    def z_tilde_at(self, t: float) -> float:
        """
        Z~_t = P(tau >= t | F_t) = m_t - A°_{t-}
        """
        return self.m_at(t) - self.a_opt_left_at(t)

    def z_se_at(self, t: float) -> float:
        """
        Standard error of Z_t, 0 for exact closed forms
        """
        return 0.0

    def series(self, times: Optional[Sequence[float]] = None) -> Dict[str, np.ndarray]:
        """
        Evaluate Z, Z~, A°, m and the standard error of Z at several times

        Args:
            times: evaluation times, defaults to `default_times()`

        Returns:
            dictionary of arrays keyed by "time", "Z", "Z_tilde", "A_opt", "m" and "Z_se"
        """
        if (times is None):
            times = self.default_times()
        times = [float(t) for t in times]
        return {
            "time": np.asarray(times),
            "Z": np.asarray([self.z_at(t) for t in times]),
            "Z_tilde": np.asarray([self.z_tilde_at(t) for t in times]),
            "A_opt": np.asarray([self.a_opt_at(t) for t in times]),
            "m": np.asarray([self.m_at(t) for t in times]),
            "Z_se": np.asarray([self.z_se_at(t) for t in times]),
        }

    def csv_rows(self, times: Optional[Sequence[float]] = None) -> List[List]:
        """
        Rows of the Azema series CSV export

        Args:
            times: evaluation times, defaults to `default_times()`

        Returns:
            list of rows matching AZEMA_CSV_HEADER
        """
        values = self.series(times)
        rows = []
        for i in range(0, len(values["time"])):
            rows.append([self.path.index] + [repr(float(values[key][i])) for key in AZEMA_CSV_HEADER[1:]])
        return rows

    def to_csv(self, filename: str, times: Optional[Sequence[float]] = None) -> None:
        """
        Write the series of this bundle to a CSV file

        Args:
            filename: output filename
            times: evaluation times, defaults to `default_times()`
        """
        with open(filename, "w", newline="") as fp:
            writer = csv.writer(fp)
            writer.writerow(AZEMA_CSV_HEADER)
            writer.writerows(self.csv_rows(times))

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of AzemaBundle object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of AzemaBundle object
        """
        return "%s(spec=%s, path_index=%d, form='%s')" % (
            self.__class__.__name__,
            self.spec.label,
            self.path.index,
            self.form,
        )
