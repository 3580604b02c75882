"""Exception hierarchy shared by every evaluator."""

from __future__ import annotations


class FracZetaError(ValueError):
    """Base class; ``kind`` is the machine-readable tag used by the CLI."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class DomainError(FracZetaError):
    pass


class PoleError(DomainError):
    pass


class OrderCapError(FracZetaError):
    pass


class ConvergenceError(FracZetaError):
    pass


class QuadratureError(ConvergenceError):
    pass
