"""Exception types shared by the whole package.

The CLI and the HTTP service map these onto exit codes / status codes,
so everything below the interface layer raises only these.
"""


class DomainError(ValueError):
    """Mathematically invalid input: degenerate lattice, zero mirror
    vector, singular matrix, non-orthogonal matrix, and the like."""


class UsageError(ValueError):
    """Malformed request: unparseable fractions, non-coprime (p, q),
    zero search bounds. The caller should fix the request, not the data."""


class RecompositionError(RuntimeError):
    """A reflection-pair decomposition failed to reproduce its input
    exactly. Must never fire on valid inputs; raised instead of
    returning a silently wrong answer."""
