"""Core pydantic models."""
from enum import Enum
from typing import Any

from pydantic import BaseModel, validator


class BaseSchema(BaseModel):
    """Common configuration for immutable domain models.

    Domain objects are built once, validated, and then shared read-only between
    workers.
    """

    class Config:
        """Sub class to freeze instances."""

        allow_mutation = False
        frozen = True


class BaseReport(BaseModel):
    """Common attributes and validators for report models written to disk.

    When dealing with enumerations store the enum value.
    Always validate assignments.
    """

    @validator("*", always=True)
    @classmethod
    def get_value_from_enums(cls, v: Any) -> Any:
        """Get value from all the enumeration field values."""
        return v.value if isinstance(v, Enum) else v

    class Config:
        """Sub class to validate assignments."""

        validate_assignment = True
