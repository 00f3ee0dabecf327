from abc import ABC, abstractmethod
import numpy as np

from exactwave.base.errors import ContractError
from exactwave.base.jets import Jet, MAX_ORDER


class ExactSolution1D(ABC):

    label = "solution"

    @abstractmethod
    def x_jet(self, t, x, order=2, t_order=0):
        """ Function to evaluate d^t_order u / dt^t_order as a Jet in x

        Parameters
        ----------
        t, x : float or numpy array
            Broadcastable evaluation points

        order : int, optional, default is 2
            Order of the jet in x, at most 2

        t_order : int, optional, default is 0
            Number of time derivatives taken first

        Returns
        -------
        Jet

        """
        return None

    def __call__(self, t, x):
        return self.x_jet(t, x, 0).value

    def t_jet(self, t, x, order=2):
        """ The jet of u in t at fixed x """
        return Jet(self.x_jet(t, x, 0, k).value for k in range(order + 1))

    def u_tt(self, t, x):
        return self.x_jet(t, x, 0, 2).value

    def u_xx(self, t, x):
        return self.x_jet(t, x, 2).coeffs[2]

    def u_tx(self, t, x):
        return self.x_jet(t, x, 1, 1).coeffs[1]

    def time_shifted(self, tau):
        """ The solution (t, x) -> u(t + tau, x) """
        return TimeShiftedSolution(self, tau)

    def __add__(self, other):
        return CombinedSolution([(1.0, self), (1.0, other)])

    def __mul__(self, coefficient):
        return CombinedSolution([(float(coefficient), self)])

    def __rmul__(self, coefficient):
        return self.__mul__(coefficient)

    def __sub__(self, other):
        return CombinedSolution([(1.0, self), (-1.0, other)])

    def describe(self):
        return {"label": self.label}


class CharacteristicSolution(ExactSolution1D):

    def __init__(self, amplitude, travel, T, X, lead=None, label="characteristic"):
        """ Class representing

            u = A(x) [T(t + a) + X(t - a)] + A1(x) [T'(t + a) - X'(t - a)]

        with the A1 term absent for rank 0. All x-dependent factors are
        supplied as jets, the waveforms as exact derivatives, and the
        chain rule is applied by jet composition.

        Parameters
        ----------
        amplitude : callable
            amplitude(x, order) -> Jet of A

        travel : callable
            travel(x, order) -> Jet of a

        T, X : AbstractWaveform
            The arbitrary functions

        lead : callable, optional
            lead(x, order) -> Jet of A1; rank 0 if omitted

        label : str, optional
        """
        self.amplitude = amplitude
        self.travel = travel
        self.lead = lead
        self.T = T
        self.X = X
        self.label = label

    def x_jet(self, t, x, order=2, t_order=0):
        if not 0 <= order <= 2:
            raise ContractError(f"solution jets in x are available up to order 2, got {order}")
        shift = t_order + (1 if self.lead is not None else 0)
        if shift + order > MAX_ORDER:
            raise ContractError(f"d^{t_order}/dt^{t_order} of a jet of order {order} needs "
                                f"waveform derivatives beyond order {MAX_ORDER}")
        t = np.asarray(t, dtype=float)
        a = self.travel(x, order)
        I1 = a + t
        I2 = t - a
        T, X = self.T, self.X
        u = self.amplitude(x, order) * (T.jet(I1.value, order, t_order).compose(I1)
                                        + X.jet(I2.value, order, t_order).compose(I2))
        if self.lead is not None:
            u = u + self.lead(x, order) * (T.jet(I1.value, order, t_order + 1).compose(I1)
                                           - X.jet(I2.value, order, t_order + 1).compose(I2))
        return u

    def time_shifted(self, tau):
        return CharacteristicSolution(self.amplitude, self.travel, self.T.shifted(tau),
                                      self.X.shifted(tau), lead=self.lead,
                                      label=f"{self.label}+{tau:g}")

    def describe(self):
        return {"label": self.label, "T": self.T.to_dict(), "X": self.X.to_dict(),
                "rank": 0 if self.lead is None else 1}


class CombinedSolution(ExactSolution1D):

    label = "combination"

    def __init__(self, terms):
        """ Linear combination sum_k c_k u_k of exact solutions of the
        same equation

        Parameters
        ----------
        terms : list of (float, ExactSolution1D)
        """
        flat = []
        for coefficient, solution in terms:
            if isinstance(solution, CombinedSolution):
                flat.extend((coefficient * c, s) for c, s in solution.terms)
            else:
                flat.append((coefficient, solution))
        self.terms = flat

    def x_jet(self, t, x, order=2, t_order=0):
        total = None
        for coefficient, solution in self.terms:
            term = solution.x_jet(t, x, order, t_order) * coefficient
            total = term if total is None else total + term
        return total

    def describe(self):
        return {"label": self.label,
                "terms": [{"coefficient": c, **s.describe()} for c, s in self.terms]}


class TimeShiftedSolution(ExactSolution1D):

    def __init__(self, solution, tau):
        self.solution = solution
        self.tau = float(tau)
        self.label = f"{solution.label}+{tau:g}"

    def x_jet(self, t, x, order=2, t_order=0):
        return self.solution.x_jet(np.add(t, self.tau), x, order, t_order)
