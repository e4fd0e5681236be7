"""Error classes shared by every package; the CLI maps them to exit codes."""

from __future__ import annotations


class GraphSpecError(ValueError):
    """Malformed graph descriptor."""

    exit_code = 2


class LimitError(ValueError):
    """Pattern order or brute-force limit exceeded."""

    exit_code = 3


class DomainError(ValueError):
    """Argument outside the operation's domain."""

    exit_code = 3


class ColoringFormatError(ValueError):
    """Malformed coloring file, payload or builtin name."""

    exit_code = 3


class BudgetExceededError(RuntimeError):
    """Exhaustive search would examine more colorings than the budget allows."""

    exit_code = 4

    def __init__(self, estimate: int, budget: int) -> None:
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"exhaustive search needs ~{estimate} leaf evaluations, budget is {budget}")


class ResourceError(RuntimeError):
    """Factorial or power cap exceeded."""

    exit_code = 4


class IndeterminateError(ArithmeticError):
    """A guarded floating comparison fell inside the safety margin."""

    exit_code = 5


class CountOverflowError(OverflowError):
    exit_code = 6


def exit_code_for(err: BaseException) -> int:
    return getattr(err, "exit_code", 1)
