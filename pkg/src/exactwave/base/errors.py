class ExactWaveError(Exception):
    """ Root of all exceptions raised by exactwave """


class ContractError(ExactWaveError, ValueError):
    """ An argument violates an operation's precondition
    (unsupported jet order, mismatched orders, non-uniform grid, ...)
    """


class DomainError(ExactWaveError, ValueError):
    """ Evaluation outside the declared domain, at a pole, or across
    a singular point of a profile
    """


class NoRootError(DomainError):
    """ A monotone inversion was asked for a value outside the image
    of its bracket
    """


class ConstructionError(ExactWaveError, ValueError):
    """ The pieces of a rank solution do not fit together """


class BlowUpError(ExactWaveError, ArithmeticError):
    def __init__(self, message, last_valid=None, step=None):
        """ A numerical integration blew up

        Parameters
        ----------
        message : str
            Description of the failure

        last_valid : float, optional
            The last value of the independent variable that was
            integrated successfully

        step : int, optional
            The time step index at which a non-finite value appeared
        """
        super().__init__(message)
        self.last_valid = last_valid
        self.step = step


class ConfigError(ExactWaveError, ValueError):
    """ A scene configuration failed validation """
