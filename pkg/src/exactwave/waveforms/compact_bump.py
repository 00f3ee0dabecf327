import numpy as np

from exactwave.base.errors import ContractError
from exactwave.waveforms.abstract_waveform import AbstractWaveform

# exp(-700) is already below the smallest normal double
_UNDERFLOW_GAP = 1.0 / 700.0


class CompactBumpWaveform(AbstractWaveform):

    kind = "compact_bump"

    def __init__(self, center=0.0, halfwidth=1.0):
        """ Class representing the C-infinity bump

            T(s) = exp(1/(z^2 - 1)),  z = (s - center)/halfwidth

        for |z| < 1 and T = 0 elsewhere. The bump and all of its
        derivatives vanish identically outside the support interval
        (center - halfwidth, center + halfwidth).

        Parameters
        ----------
        center : float, optional, default is 0
            Center of the support interval

        halfwidth : float, optional, default is 1
            Half the length of the support interval, must be positive


        Attributes
        ----------
        center : float

        halfwidth : float

        support : tuple of float
            The open support interval
        """
        if halfwidth <= 0:
            raise ContractError("compact_bump halfwidth must be positive")
        super().__init__((center, halfwidth))
        self.center = float(center)
        self.halfwidth = float(halfwidth)

    @property
    def support(self):
        return (self.center - self.halfwidth, self.center + self.halfwidth)

    def derivatives(self, s, order):
        self._check_order(order)
        z = (np.asarray(s, dtype=float) - self.center) / self.halfwidth
        inside = (1.0 - z**2) > _UNDERFLOW_GAP
        # evaluate on a safe dummy argument outside the support
        zi = np.where(inside, z, 0.0)
        q = zi**2 - 1.0

        phi = 1.0 / q
        d1 = -2.0 * zi / q**2
        d2 = (6.0 * zi**2 + 2.0) / q**3
        d3 = -24.0 * zi * (zi**2 + 1.0) / q**4

        f = np.exp(phi)
        values = [f, f * d1, f * (d2 + d1**2), f * (d3 + 3.0 * d1 * d2 + d1**3)]
        return [np.where(inside, values[k], 0.0) / self.halfwidth**k
                for k in range(order + 1)]
