"""Exception types shared across the package."""


class DegenerateGeometryError(ValueError):
    """A propagation distance collapsed to zero or below."""


class InvalidScenarioError(ValueError):
    """Scenario parameters violate the model's preconditions (e.g. x_R <= 0)."""


class UndefinedMetricError(ValueError):
    """A metric has no value for the given input (e.g. all-zero correlation)."""
