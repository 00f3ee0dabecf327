from abc import ABC, abstractmethod
import numpy as np

from exactwave.base.errors import ContractError
from exactwave.base.jets import Jet, MAX_ORDER


class AbstractWaveform(ABC):

    kind = None

    def __init__(self, params=()):
        """ Abstract class representing an arbitrary single-variable
        signal T(s), the arbitrary function of a general solution.

        Subclasses return exact analytic derivatives up to third
        order; nothing here is differenced numerically.

        Parameters
        ----------
        params : list of float, optional
            The parameters of the waveform, their meaning depends
            on the kind


        Attributes
        ----------
        kind : str
            Name of the waveform family

        params : tuple of float
            The parameters of the waveform


        Methods
        -------
        derivatives
            Function returning the derivatives of orders 0..order

        jet
            Function returning the derivatives at a point as a Jet

        shifted
            Function returning the waveform s -> T(s + tau)

        """
        self.params = tuple(float(p) for p in params)

    @abstractmethod
    def derivatives(self, s, order):
        """ Function to calculate the derivatives of the waveform

        Parameters
        ----------
        s : float or numpy array
            The argument(s)

        order : int
            Highest derivative to return, at most 3

        Returns
        -------
        list
            d^k T / ds^k for k = 0..order, each with the shape of s

        """
        return None

    def _check_order(self, order):
        if not 0 <= order <= MAX_ORDER:
            raise ContractError(f"waveform derivatives are available up to order "
                                f"{MAX_ORDER}, got {order}")

    def __call__(self, s):
        return self.derivatives(s, 0)[0]

    def jet(self, s, order, shift=0):
        """ Function to evaluate the waveform at s as a Jet

        Parameters
        ----------
        s : float or numpy array
            The argument(s), must be finite

        order : int
            Order of the returned jet

        shift : int, optional, default is 0
            Number of derivatives already taken, i.e. the jet of
            T^(shift) is returned. shift + order may not exceed 3

        Returns
        -------
        Jet
            The jet of T^(shift) at s

        """
        self._check_order(order + shift)
        if not np.all(np.isfinite(s)):
            raise ContractError("waveform argument must be finite")
        return Jet(self.derivatives(s, order + shift)[shift:])

    def shifted(self, tau):
        return ShiftedWaveform(self, tau)

    def to_dict(self):
        return {"kind": self.kind, "params": list(self.params)}

    def __repr__(self):
        return f"{self.kind}{self.params}"


class ShiftedWaveform(AbstractWaveform):

    kind = "shifted"

    def __init__(self, waveform, tau):
        """ The waveform s -> T(s + tau) """
        super().__init__((tau,))
        self.waveform = waveform
        self.tau = float(tau)

    def derivatives(self, s, order):
        return self.waveform.derivatives(np.add(s, self.tau), order)

    def to_dict(self):
        return {"kind": self.kind, "tau": self.tau, "waveform": self.waveform.to_dict()}
