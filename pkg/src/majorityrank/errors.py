"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (bad file, unknown alternative, ...)."""


class DegenerateRankingError(ValueError):
    """A correlation is undefined because a ranking ties all alternatives."""


class NumericalError(RuntimeError):
    """A numerical routine failed to produce a result within its budget."""


class SingletonLeagueError(ValueError):
    """A transition matrix was requested for a one-member league.

    The transition model divides by ``m - 1``; a singleton league has no
    games to play and its only member trivially receives probability 1.
    Callers that iterate over leagues handle this case directly.
    """


class SizeLimitError(ValueError):
    """An exact combinatorial computation would exceed its instance-size cap."""
