"""Exception types shared across the package."""


class TfsrgError(Exception):
    """Base class for all package errors."""


class InvalidPrime(TfsrgError):
    """p is not an odd prime."""


class TooLarge(TfsrgError):
    """Requested field order exceeds the table cap."""


class FieldMismatch(TfsrgError):
    """Operands belong to different fields."""


class DivisionByZero(TfsrgError):
    """Multiplicative inverse of zero requested."""


class ParseError(TfsrgError):
    """Malformed element or point syntax."""


class NoSuchRoot(TfsrgError):
    """A square root required by the construction does not exist."""


class DegeneratePair(TfsrgError):
    """A point pair with equal members, or a cross-ratio of a pair with itself."""


class InadmissibleU(TfsrgError):
    """Edge parameter u in {0, 1, -1}, for which the edge rule degenerates."""


class ConstructionViolation(TfsrgError):
    """Base-partition parts overlap; the construction preconditions were broken."""


class InvalidPartition(TfsrgError):
    """Partition does not cover the vertex set exactly once."""


class InfeasibleK(TfsrgError):
    """Degree parameter k outside the feasible range."""


class InfeasibleH(TfsrgError):
    """h congruent to 0 mod 4, ruled out by the feasibility conditions."""


class ConsistencyFailure(TfsrgError):
    """An exact internal cross-check failed; results cannot be trusted."""


class InvalidOrbit(TfsrgError):
    """Orbit parameters (v, w) outside the valid range."""


class InvalidLabels(TfsrgError):
    """Graph vertex labels do not match the expected point-pair layout."""


class DegenerateGraph(TfsrgError):
    """Graph is complete or edgeless; SRG parameters are undefined."""


class Disconnected(TfsrgError):
    """Graph is disconnected; diameter is undefined."""
