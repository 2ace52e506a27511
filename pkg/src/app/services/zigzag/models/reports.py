"""
Report models emitted by the CLI.

Every model renders to one line of ``key=value`` pairs for the ``records``
output format; field order is the declaration order.
"""

import json
from enum import Enum

from pydantic import BaseModel, Field, field_validator


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class RecordModel(BaseModel):
    """Model with a deterministic single-line ``key=value`` rendering."""

    record_type: str = Field(default="record", exclude=True)

    def to_record(self) -> str:
        parts = [f"type={self.record_type}"]
        for key, value in self.model_dump(mode="json").items():
            parts.append(f"{key}={_encode(value)}")
        return " ".join(parts)


def _encode(value: object) -> str:
    if isinstance(value, str):
        if value and not any(ch.isspace() or ch in '="' for ch in value):
            return value
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, list):
        return ",".join(_encode(item) for item in value) or "-"
    if value is None:
        return "-"
    return json.dumps(value)


class NerveRecord(RecordModel):
    record_type: str = Field(default="nerve", exclude=True)

    name: str
    dimension: int
    f_vector: list[int]
    simplices: list[str] = Field(description="Nerve simplices grouped by dimension, canonical order")


class SaturationRecord(RecordModel):
    record_type: str = Field(default="saturation", exclude=True)

    name: str
    original: list[str]
    added: list[str]
    order: list[str]


class CohomologyRecord(RecordModel):
    record_type: str = Field(default="cohomology", exclude=True)

    name: str
    degree: int
    cech: str
    nerve: str
    space: str | None = None
    generators: int


class ChaseRecord(RecordModel):
    record_type: str = Field(default="chase", exclude=True)

    name: str
    degree: int
    generator: int
    order: int = Field(description="Order of the class, 0 for free")
    alpha: str
    chased: str
    evaluated: str


class CertificateRecord(RecordModel):
    record_type: str = Field(default="certificate", exclude=True)

    name: str
    degree: int
    generator: int
    sign: int
    status: Status
    alpha: str
    chased: str
    evaluated: str
    witness: str

    @field_validator("sign")
    @classmethod
    def sign_must_be_unit(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return value


class CorpusRecord(RecordModel):
    record_type: str = Field(default="corpus", exclude=True)

    space: str
    degree: int
    cech: str
    nerve: str
    space_group: str | None = None
    certificates: str
    exactness: Status
    status: Status


class CheckRecord(RecordModel):
    record_type: str = Field(default="check", exclude=True)

    space: str
    check: str
    status: Status
    detail: str = ""
    # Reported without affecting the overall verdict
    informational: bool = False
