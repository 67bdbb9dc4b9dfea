"""Exception hierarchy.

Exit-code mapping used by the CLI: 2 argument/precondition, 3 numeric
failure, 4 I/O and parsing. Library code raises these directly; nothing
here depends on the rest of the package.
"""


class MatsketchError(Exception):
    exit_code = 1


class ArgumentError(MatsketchError, ValueError):
    """Bad arguments or violated preconditions."""

    exit_code = 2


class RankError(ArgumentError):
    """Input has lower numerical rank than the operation requires."""


class GuardError(ArgumentError):
    """Combinatorial guard of a brute-force oracle exceeded; refusal."""


class NumericError(MatsketchError, RuntimeError):
    """Numerical failure: non-convergence, broken barrier invariant, etc."""

    exit_code = 3


class InfeasibleStepError(NumericError):
    """No admissible index at some step of a greedy selection.

    Carries the step and the best margin seen so the caller can tell a
    genuine input problem (non-orthonormal V) from a bug.
    """

    def __init__(self, step, margin, detail=""):
        self.step = int(step)
        self.margin = float(margin)
        msg = f"no feasible index at step {self.step} (best margin {self.margin:.3e})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ConvergenceError(NumericError):
    """Iteration cap exceeded."""


class DataFormatError(MatsketchError, ValueError):
    """Malformed input file; message carries the offending line number."""

    exit_code = 4
