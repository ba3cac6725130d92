"""Exception types raised by the qcsd package."""


class InputError(ValueError):
    """Malformed argument: bad polynomial text, out-of-range size, etc."""


class CapacityError(ValueError):
    """Request exceeds what an enumeration routine is willing to do."""


class MalformedDistributionError(ValueError):
    """A weight distribution that cannot come from the codes we classify."""
