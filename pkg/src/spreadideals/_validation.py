"""Argument checks shared by the public functions."""

import numbers


class DomainError(ValueError):
    """An input that is well formed but outside an operation's domain (e.g. n < t)."""


class ParseError(ValueError):
    """Malformed textual or JSON input; ``token`` names the offending piece."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


def check_int(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_n_t(n, t):
    """Validate an ambient size and a spread with n >= t >= 1."""
    n = check_int(n, "n", 1)
    t = check_int(t, "t", 1)
    if n < t:
        raise DomainError(f"need n >= t, got n={n}, t={t}")
    return n, t
