class FermicavError(Exception):
    exit_code = 1


class ConfigError(FermicavError):
    """Invalid scenario configuration or command-line override"""
    exit_code = 2


class ToleranceError(FermicavError):
    """Two evaluation routes disagree beyond the configured tolerance"""
    exit_code = 3


class QuadratureError(FermicavError):
    """
    Adaptive quadrature failed to reach its target

    Args:
        message: description of the failing integral
        estimate: achieved absolute error estimate
        target: requested absolute error
    """

    def __init__(self, message, estimate=None, target=None):
        super().__init__(message)
        self.estimate = estimate
        self.target = target

    def __str__(self):
        msg = super().__str__()
        if self.estimate is not None:
            msg += " (achieved error estimate %.3e, target %.3e)" % (
                self.estimate, self.target)
        return msg
