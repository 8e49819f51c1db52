"""Work limits shared by the solvers."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    oracle: int = 1 << 22  # subsets examined by exhaustive search
    recognition: int = 10 ** 7  # arc-order search expansions
    root: int = 10 ** 6  # root reconstruction nodes

    @classmethod
    def uniform(cls, n: int) -> "Budgets":
        return cls(oracle=n, recognition=n, root=max(n, 10 ** 6))


DEFAULT_BUDGETS = Budgets()
