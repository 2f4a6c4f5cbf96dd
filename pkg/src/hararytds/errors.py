"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Graph or construction parameters outside their valid domain."""


class UnsupportedDegreeError(ParameterError):
    """Degree parameter below 2; double total domination cannot exist."""


class InfeasibleError(ValueError):
    """Minimum degree is below k, so no k-tuple total dominating set exists."""
