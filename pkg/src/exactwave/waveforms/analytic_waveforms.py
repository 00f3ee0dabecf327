import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial.hermite import hermval

from exactwave.base.errors import ContractError
from exactwave.waveforms.abstract_waveform import AbstractWaveform


class GaussianWaveform(AbstractWaveform):

    kind = "gaussian"

    def __init__(self, center=0.0, width=1.0):
        """ Class representing T(s) = exp(-((s - center)/width)^2)

        Parameters
        ----------
        center : float, optional, default is 0

        width : float, optional, default is 1
            Must be positive
        """
        if width <= 0:
            raise ContractError("gaussian width must be positive")
        super().__init__((center, width))
        self.center = float(center)
        self.width = float(width)

    def derivatives(self, s, order):
        self._check_order(order)
        z = (np.asarray(s, dtype=float) - self.center) / self.width
        envelope = np.exp(-z**2)
        # d^k/dz^k exp(-z^2) = (-1)^k H_k(z) exp(-z^2), physicists' Hermite H_k
        return [(-1)**k * hermval(z, [0.0] * k + [1.0]) * envelope / self.width**k
                for k in range(order + 1)]


class SineWaveform(AbstractWaveform):

    kind = "sine"

    def __init__(self, frequency=1.0, phase=0.0):
        """ Class representing T(s) = sin(frequency*s + phase)

        Parameters
        ----------
        frequency : float, optional, default is 1
            Angular frequency

        phase : float, optional, default is 0
        """
        super().__init__((frequency, phase))
        self.frequency = float(frequency)
        self.phase = float(phase)

    def derivatives(self, s, order):
        self._check_order(order)
        arg = self.frequency * np.asarray(s, dtype=float) + self.phase
        sin, cos = np.sin(arg), np.cos(arg)
        cycle = (sin, cos, -sin, -cos)
        return [self.frequency**k * cycle[k] for k in range(order + 1)]


class PolynomialWaveform(AbstractWaveform):

    kind = "polynomial"

    def __init__(self, *coefficients):
        """ Class representing T(s) = sum_k coefficients[k] s^k """
        if len(coefficients) == 0:
            raise TypeError("Need at least one polynomial coefficient.")
        super().__init__(coefficients)
        self.polynomial = Polynomial(self.params)

    def derivatives(self, s, order):
        self._check_order(order)
        s = np.asarray(s, dtype=float)
        return [self.polynomial.deriv(k)(s) if k else self.polynomial(s)
                for k in range(order + 1)]


class ZeroWaveform(AbstractWaveform):

    kind = "zero"

    def derivatives(self, s, order):
        self._check_order(order)
        zero = np.zeros_like(np.asarray(s, dtype=float))
        return [zero] * (order + 1)
