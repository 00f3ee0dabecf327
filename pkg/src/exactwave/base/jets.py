from math import comb
import numpy as np

from exactwave.base.errors import ContractError

MAX_ORDER = 3


class Jet:
    # numpy arrays defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, coeffs):
        """ Class holding a value together with its derivatives

        The coefficients are the actual derivatives, not Taylor
        coefficients: ``coeffs[k]`` is d^k f / dx^k. Every coefficient
        may be a float or a numpy array; arrays are combined with the
        usual broadcasting rules, so one jet can carry a whole grid.

        Parameters
        ----------
        coeffs : sequence of float or numpy array
            The derivatives of orders 0 to ``order``

        Attributes
        ----------
        coeffs : tuple
            The derivatives of orders 0 to ``order``

        order : int
            Highest derivative carried, between 0 and 3

        value : float or numpy array
            The 0th coefficient

        Methods
        -------
        constant
            Build the jet of a constant

        variable
            Build the jet of the independent variable

        compose
            Chain rule, with self as the outer function

        reciprocal
            The jet of 1/f
        """
        coeffs = tuple(coeffs)
        if not 1 <= len(coeffs) <= MAX_ORDER + 1:
            raise ContractError(f"jet order must be between 0 and {MAX_ORDER}, "
                                f"got {len(coeffs) - 1}")
        self.coeffs = coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def value(self):
        return self.coeffs[0]

    @classmethod
    def constant(cls, c, order):
        return cls((c,) + (0.0,) * order)

    @classmethod
    def variable(cls, x, order):
        if not 0 <= order <= MAX_ORDER:
            raise ContractError(f"jet order must be between 0 and {MAX_ORDER}, got {order}")
        return cls((x, 1.0, 0.0, 0.0)[:order + 1])

    def truncate(self, order):
        if order > self.order:
            raise ContractError(f"cannot raise jet order from {self.order} to {order}")
        return Jet(self.coeffs[:order + 1])

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ContractError(f"jet orders differ: {self.order} and {other.order}")
            return other
        return Jet.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return Jet(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Jet(-a for a in self.coeffs)

    def __sub__(self, other):
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(a * other for a in self.coeffs)
        other = self._coerce(other)
        f, g = self.coeffs, other.coeffs
        # Leibniz rule
        return Jet(sum(comb(k, j) * f[j] * g[k - j] for j in range(k + 1))
                   for k in range(self.order + 1))

    def __rmul__(self, other):
        return self.__mul__(other)

    def reciprocal(self):
        v = self.value
        outer = Jet((1.0 / v, -1.0 / v**2, 2.0 / v**3, -6.0 / v**4)[:self.order + 1])
        return outer.compose(self)

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(a / other for a in self.coeffs)
        return self.__mul__(self._coerce(other).reciprocal())

    def __rtruediv__(self, other):
        return self.reciprocal().__mul__(other)

    def __pow__(self, p):
        v = self.value
        derivs, falling = [], 1.0
        for k in range(self.order + 1):
            derivs.append(falling * v**(p - k) if falling != 0.0 else 0.0 * v)
            falling *= p - k
        return Jet(derivs).compose(self)

    def compose(self, inner):
        """ Function to compose two jets, self being the outer function
        evaluated at ``inner.value``

        Implements Faa di Bruno's formula up to third order:
        (f o g)''' = f''' g'^3 + 3 f'' g' g'' + f' g'''

        Parameters
        ----------
        inner : Jet
            The inner function, with the same order as self

        Returns
        -------
        Jet
            The jet of the composition
        """
        if not isinstance(inner, Jet) or inner.order != self.order:
            raise ContractError("composition needs two jets of equal order")
        f, g = self.coeffs, inner.coeffs
        out = [f[0]]
        if self.order >= 1:
            out.append(f[1] * g[1])
        if self.order >= 2:
            out.append(f[2] * g[1]**2 + f[1] * g[2])
        if self.order >= 3:
            out.append(f[3] * g[1]**3 + 3.0 * f[2] * g[1] * g[2] + f[1] * g[3])
        return Jet(out)

    def __repr__(self):
        return f"Jet({', '.join(repr(c) for c in self.coeffs)})"


def jet_compose(outer, inner):
    return outer.compose(inner)


def jet_exp(inner):
    e = np.exp(inner.value)
    return Jet((e,) * (inner.order + 1)).compose(inner)


def jet_sin(inner):
    s, c = np.sin(inner.value), np.cos(inner.value)
    return Jet((s, c, -s, -c)[:inner.order + 1]).compose(inner)


def jet_cos(inner):
    s, c = np.sin(inner.value), np.cos(inner.value)
    return Jet((c, -s, -c, s)[:inner.order + 1]).compose(inner)
