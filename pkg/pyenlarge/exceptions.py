"""
The exceptions module contains exceptions unique to the PyEnlarge library
"""

from typing import Dict, Optional


class EnlargeException(Exception):
    """
    Base class of the PyEnlarge errors, the `diagnostics` keyword argument
    carries the values that led to the error (empty dict by default)
    """

    def __init__(self, *args, **kwargs):
        self.diagnostics = kwargs.pop("diagnostics", {})
        super(EnlargeException, self).__init__(*args, **kwargs)


class EnlargeParameterException(EnlargeException):
    """
    A simulation parameter is out of its allowed range
    """
    pass


class EnlargeContractException(EnlargeException):
    """
    The combination of market model, random time and operation
    is not supported
    """
    pass


class EnlargeDomainException(EnlargeException):
    """
    A special function was evaluated outside of its domain
    """
    pass


class EnlargeNumericalException(EnlargeException):
    """
    A quadrature or root finding routine did not converge. Details
    are available in the `diagnostics` attribute.
    """
    pass


class EnlargeInvariantException(EnlargeException):
    """
    A mathematical invariant was violated along a path (for example a
    non-positive stochastic exponential factor)
    """
    pass


class EnlargeConfigException(EnlargeException):
    """
    An experiment configuration file could not be parsed or validated
    """

    def __init__(self, *args, line: Optional[int] = None, field: Optional[str] = None, **kwargs):
        self.line = line
        self.field = field
        super(EnlargeConfigException, self).__init__(*args, **kwargs)

    def __str__(self) -> str:
        message = super(EnlargeConfigException, self).__str__()
        location: Dict[str, object] = {}
        if (self.line is not None):
            location["line"] = self.line
        if (self.field is not None):
            location["field"] = self.field
        if (len(location) == 0):
            return message
        return "%s (%s)" % (message, ", ".join("%s=%s" % (k, v) for k, v in location.items()))
