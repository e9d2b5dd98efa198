"""Exception types shared across the package."""


class InfeasibleError(Exception):
    """Raised when an instance fails a feasibility precondition.

    Distinct from ValueError (malformed input): the input parses fine but
    the requested object provably does not exist.
    """


class CertificateError(Exception):
    """Raised when a certificate fails schema validation."""
