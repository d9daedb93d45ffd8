"""Exception hierarchy shared by every estimator in the package."""


class ProcovaError(Exception):
    """Base class for all errors raised by :mod:`procova`."""


class DimensionMismatch(ProcovaError, ValueError):
    pass


class EmptyData(ProcovaError, ValueError):
    pass


class RankDeficient(ProcovaError):
    """Design matrix is (numerically) rank deficient.

    Usually signals collinear covariates or a prognostic score that is
    constant across the trial sample.
    """


class Singular(ProcovaError):
    pass


class SingleArm(ProcovaError):
    """All trial subjects share one treatment assignment."""


class InvalidTarget(ProcovaError, ValueError):
    pass


class InvalidProbability(ProcovaError, ValueError):
    pass


class DegenerateScore(ProcovaError):
    """Prognostic score has zero variance under the population."""


class AllReplicationsFailed(ProcovaError):
    pass


# Failures that a replication loop records instead of propagating.
ESTIMATION_FAILURES = (RankDeficient, Singular, SingleArm)
