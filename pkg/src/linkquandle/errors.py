"""Exception types and resource caps shared across the package."""

import os


class LinkQuandleError(Exception):
    pass


class DiagramError(LinkQuandleError, ValueError):
    """Malformed Gauss code text or an invalid diagram."""

    def __init__(self, message, label=None, position=None):
        super().__init__(message)
        self.label = label
        self.position = position


class CapExceeded(LinkQuandleError):
    """A search or enumeration would exceed its configured cap."""


class PreconditionError(LinkQuandleError, ValueError):
    pass


class NotTranslationCommutative(PreconditionError):
    def __init__(self, triple):
        x, y, z = triple
        super().__init__(
            f"quandle is not translation-commutative: "
            f"(x>y)>z != (x>z)>y at x={x}, y={y}, z={z}")
        self.triple = triple


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def max_mu(default=10):
    """Permutation-search cap (``LQ_MAX_MU``)."""
    return _env_int("LQ_MAX_MU", default)


def max_canonical_mu():
    return max_mu(default=8)


def max_colorings():
    """Enumeration budget for coloring counters (``LQ_MAX_COLORINGS``)."""
    return _env_int("LQ_MAX_COLORINGS", 10**8)


def check_mu(mu, cap, what):
    if mu > cap:
        raise CapExceeded(f"{what}: mu={mu} exceeds cap {cap} (set LQ_MAX_MU)")
