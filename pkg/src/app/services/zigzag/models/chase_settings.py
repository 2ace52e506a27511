"""Nested settings sections: chase limits and acceptance checks."""

from pydantic import Field

from . import CustomBaseModel


class ChaseSettings(CustomBaseModel):
    """Limits for chases and certificates."""

    # Bounds the brute-force oracle and the sign table; inputs of any degree are accepted
    MAX_DEGREE: int = Field(default=6, ge=0)
    # Chases up to this degree are cross-checked against the brute-force chain chase
    ORACLE_MAX_DIMENSION: int = Field(default=3, ge=0)
    WORKERS: int = Field(default=4, ge=1)


class CheckSettings(CustomBaseModel):
    """Sizes of the acceptance checks run by ``corpus``."""

    EXACTNESS_MAX_TOTAL_DEGREE: int = Field(default=4, ge=0)
    RANDOM_SAMPLES: int = Field(default=200, ge=0)
    ORDER_TRIALS: int = Field(default=3, ge=0)
