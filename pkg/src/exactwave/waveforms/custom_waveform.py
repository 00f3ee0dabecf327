import numpy as np

from exactwave.base.errors import ContractError
from exactwave.base.jets import MAX_ORDER
from exactwave.waveforms.abstract_waveform import AbstractWaveform


class CustomWaveform(AbstractWaveform):

    kind = "custom"

    def __init__(self, func, max_order=MAX_ORDER, name="custom"):
        """ Waveform defined by a user function returning its own
        derivatives.

        Parameters
        ----------
        func : callable
            func(s, order) must return a sequence with the derivatives
            of orders 0..order at s

        max_order : int, optional, default is 3
            Highest order func can provide

        name : str, optional
            Label used in repr
        """
        if not callable(func):
            raise TypeError("CustomWaveform needs a callable func(s, order).")
        super().__init__()
        self.func = func
        self.max_order = int(max_order)
        self.name = name

    def derivatives(self, s, order):
        self._check_order(order)
        if order > self.max_order:
            raise ContractError(f"{self.name} provides derivatives up to order "
                                f"{self.max_order}, got {order}")
        values = list(self.func(s, order))
        if len(values) < order + 1:
            raise ContractError(f"{self.name} returned {len(values)} derivatives, "
                                f"expected {order + 1}")
        return [np.asarray(v, dtype=float) for v in values[:order + 1]]

    def to_dict(self):
        return {"kind": self.kind, "name": self.name}

    def __repr__(self):
        return f"custom({self.name})"
