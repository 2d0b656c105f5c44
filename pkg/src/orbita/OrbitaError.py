import typing


class OrbitaError(Exception):
    """
    Base class for all errors raised by orbita.

    Every error carries a machine readable `reason` token, an optional dict of
    JSON-able `details`, and the process `exit_code` the command line uses
    when the error escapes a command.
    """
    reason = "orbita_error"
    exit_code = 1

    def __init__(self, message: str = None, details: typing.Optional[dict] = None, **kwargs):
        if message is None:
            message = self.reason
        super().__init__(message)
        self.details = dict(details or {})
        self.details.update(kwargs)

    def to_json_able(self) -> dict:
        return {
            'error': type(self).__name__,
            'reason': self.reason,
            'message': str(self),
            'details': self.details,
        }


class ConfigError(OrbitaError, ValueError):
    reason = "config_error"
    exit_code = 2


class InvalidCartan(OrbitaError, ValueError):
    reason = "invalid_cartan"
    exit_code = 2


class InconsistentFlags(OrbitaError, ValueError):
    reason = "inconsistent_flags"
    exit_code = 2


class NotRegular(OrbitaError, ValueError):
    reason = "not_regular"


class NotStronglyElliptic(OrbitaError, ValueError):
    reason = "not_strongly_elliptic"


class NotAdmissibleOrbit(OrbitaError, ValueError):
    reason = "not_admissible_orbit"


class NotDominant(OrbitaError, ValueError):
    reason = "not_dominant"


class NonTerminating(OrbitaError, ArithmeticError):
    reason = "non_terminating"


class IncompatibleLattices(OrbitaError, ValueError):
    reason = "incompatible_lattices"


class EmptySupport(OrbitaError, ValueError):
    reason = "empty_support"


class DegenerateCone(OrbitaError, ValueError):
    reason = "degenerate_cone"


class ZeroGap(OrbitaError, ArithmeticError):
    reason = "zero_gap"


class UncertifiedRange(OrbitaError, ValueError):
    reason = "uncertified_range"


class NotAdmissiblePair(OrbitaError, ValueError):
    reason = "not_admissible_pair"
    exit_code = 3


class NegativeMultiplicity(OrbitaError, RuntimeError):
    reason = "negative_multiplicity"
    exit_code = 4


class UnexpectedKtype(OrbitaError, RuntimeError):
    reason = "unexpected_ktype"
    exit_code = 4


class SelfTestFailure(OrbitaError, RuntimeError):
    reason = "selftest_failure"
    exit_code = 4
