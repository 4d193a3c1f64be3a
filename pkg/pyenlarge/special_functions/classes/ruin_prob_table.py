"""
Class definition for the tabulated ruin probability
"""

import math
import datetime
import numpy as np
from scipy import interpolate, optimize
from typing import Dict, Optional, Union
from .. import (RUIN_SERIES_TOLERANCE,
                RUIN_TABLE_RANGE,
                RUIN_NODES_PER_UNIT,
                RUIN_MAX_TERMS)
from ...exceptions import EnlargeDomainException, EnlargeNumericalException

# pdoc init
__pdoc__: Dict = {}


class RuinProbTable:
    """
    Ruin probability Psi(x) = P(x + mu t - N_t < 0 for some t) of a
    Poisson surplus with unit claims, as a function of the capital x >= 0.

    The table evaluates the Pollaczek-Khinchine series
    Psi(x) = (1 - rho) sum_n rho^n P(U_1 + ... + U_n > x) with uniform
    ladder heights U_i. Every convolution power is piecewise polynomial on
    unit intervals and is carried exactly in Bernstein form, so the series
    is exact at the table nodes up to the truncation bound. Between nodes
    a cubic Hermite interpolant uses the exact slopes given by the delay
    equation Psi'(x) = rho (Psi(x) - Psi(x - 1)), with Psi = 1 below 0.
    Beyond `x_max` the Cramer-Lundberg tail C exp(-R x) is used.

    Attributes:
        theta: safety loading mu/lam - 1, must be positive
        rho: 1 / (1 + theta)
        n_terms: number of series terms kept
        truncation_error: bound on the neglected series tail
        x_max: end of the tabulated range
        lundberg: the Lundberg exponent R
        tail_constant: the constant C of the exponential tail
    """

    def __init__(self,
                 theta: float,
                 tolerance: Optional[float] = RUIN_SERIES_TOLERANCE,
                 x_max: Optional[int] = RUIN_TABLE_RANGE,
                 nodes_per_unit: Optional[int] = RUIN_NODES_PER_UNIT,
                 verbose: Optional[bool] = False):
        # check input
        if (theta is None or not np.isfinite(theta) or not theta > 0):
            raise EnlargeDomainException("Ruin probabilities require theta > 0, got %s" % (theta))

        # set values
        self.theta = float(theta)
        self.rho = 1.0 / (1.0 + self.theta)
        self.x_max = int(x_max)
        self.nodes_per_unit = int(nodes_per_unit)
        self.n_terms = int(math.ceil(math.log(tolerance * (1.0 - self.rho)) / math.log(self.rho) - 1.0))
        self.n_terms = max(self.n_terms, 1)
        self.truncation_error = self.rho**(self.n_terms + 1) / (1.0 - self.rho)
        if (self.n_terms > RUIN_MAX_TERMS):
            raise EnlargeNumericalException("The ruin series needs %d terms for theta=%s" % (self.n_terms, theta),
                                            diagnostics={"theta": theta, "n_terms": self.n_terms})

        # build
        if (verbose is True):
            print("[%s] Building ruin table for theta=%s with %d terms ..." % (datetime.datetime.now(),
                                                                              self.theta,
                                                                              self.n_terms))
        self.node_values = self.__series_at_nodes()
        self.__ppoly = self.__hermite_pieces()
        self.lundberg = self.__lundberg_exponent()
        self.tail_constant = float(self.node_values[-1, -1]) * math.exp(self.lundberg * self.x_max)

    def __series_at_nodes(self) -> np.ndarray:
        # nodes k + y, y in [0, 1], for the first x_max unit pieces
        m = self.nodes_per_unit
        y = np.linspace(0.0, 1.0, m + 1)
        k_max = self.x_max
        rho = self.rho

        # density of U_1 in Bernstein form, one row of coefficients per piece
        density = np.zeros((k_max, 1))
        density[0, 0] = 1.0
        basis = np.ones((1, m + 1))
        values = np.zeros((k_max, m + 1))
        survival = np.zeros((k_max, m + 1))
        weight = 1.0 - rho
        for n in range(1, self.n_terms + 1):
            # antiderivative of the density on each piece (degree n)
            antiderivative = np.concatenate([np.zeros((k_max, 1)), np.cumsum(density, axis=1)], axis=1) / n
            mass = antiderivative[:, n]
            mass_above = 1.0 - np.cumsum(mass)
            coefficients = (mass_above + mass)[:, np.newaxis] - antiderivative

            # Bernstein basis of degree n at the local nodes
            next_basis = np.zeros((n + 1, m + 1))
            next_basis[:-1] += (1.0 - y) * basis
            next_basis[1:] += y * basis
            basis = next_basis

            # P(U_1 + ... + U_n > k + y)
            survival = np.clip(coefficients @ basis, 0.0, 1.0)
            weight *= rho
            values += weight * survival

            # density of the next convolution power
            previous = np.concatenate([np.zeros((1, n + 1)), antiderivative[:-1]], axis=0)
            density = (previous[:, n][:, np.newaxis] - previous) + antiderivative

        # neglected terms, exact at x = 0 where every survival equals 1
        values += rho**(self.n_terms + 1) * survival
        return values

    def __hermite_pieces(self) -> interpolate.PPoly:
        m = self.nodes_per_unit
        y = np.linspace(0.0, 1.0, m + 1)
        coefficients = []
        breakpoints = []
        for k in range(0, self.x_max):
            shifted = np.ones(m + 1) if k == 0 else self.node_values[k - 1]
            slopes = self.rho * (self.node_values[k] - shifted)
            piece = interpolate.CubicHermiteSpline(k + y, self.node_values[k], slopes)
            coefficients.append(piece.c)
            breakpoints.append(piece.x[:-1])
        breakpoints.append(np.array([float(self.x_max)]))
        return interpolate.PPoly(np.concatenate(coefficients, axis=1), np.concatenate(breakpoints), extrapolate=False)

    def __lundberg_exponent(self) -> float:
        def f(r):
            return math.expm1(r) - r / self.rho
        hi = 1.0
        while (f(hi) <= 0):
            hi *= 2.0
        try:
            return float(optimize.brentq(f, 1e-12, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps))
        except (ValueError, RuntimeError) as e:
            raise EnlargeNumericalException("Lundberg exponent root search failed: %s" % (e),
                                            diagnostics={"theta": self.theta}) from e

    def __call__(self, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """
        Evaluate Psi, with Psi(x) = 1 for x < 0

        Args:
            x: capital, scalar or array

        Returns:
            the ruin probability, a float for scalar input
        """
        arr = np.asarray(x, dtype=float)
        out = np.ones(arr.shape)
        inside = (arr >= 0) & (arr <= self.x_max)
        out[inside] = self.__ppoly(arr[inside])
        beyond = arr > self.x_max
        out[beyond] = self.tail_constant * np.exp(-self.lundberg * arr[beyond])
        if (np.ndim(x) == 0):
            return float(out)
        return out

    def derivative(self, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """
        Right derivative of Psi from the delay equation
        Psi'(x) = rho (Psi(x) - Psi(x - 1))

        Args:
            x: capital, scalar or array (x >= 0)

        Returns:
            the derivative, a float for scalar input
        """
        return self.rho * (self(x) - self(np.asarray(x, dtype=float) - 1.0))

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of RuinProbTable object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of RuinProbTable object
        """
        return "%s(theta=%s, rho=%s, n_terms=%d, truncation_error=%s, x_max=%d)" % (
            self.__class__.__name__,
            repr(self.theta),
            repr(self.rho),
            self.n_terms,
            repr(self.truncation_error),
            self.x_max,
        )
