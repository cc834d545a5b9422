"""Exception types shared across the package."""


class MigrAgentError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(MigrAgentError):
    """Invalid parameter value or malformed configuration file."""


class SchemaError(MigrAgentError):
    """Input table is missing required columns or has an unusable layout."""


class SingularDesignError(MigrAgentError):
    """Design matrix is rank deficient."""

    def __init__(self, columns, message=None):
        self.columns = tuple(columns)
        super().__init__(message or f"design matrix is singular; collinear columns: {', '.join(self.columns)}")


class SweepError(MigrAgentError):
    """A replication inside a parameter sweep failed."""


class RenderError(MigrAgentError):
    """A chart cannot be rendered from the given data."""
