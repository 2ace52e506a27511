"""Request model for a single CLI invocation."""

from pydantic import BaseModel, Field, model_validator

from app.services.zigzag.models import Command, OutputFormat

# Commands that accept --degree
DEGREE_COMMANDS = frozenset({Command.COHOMOLOGY, Command.CHASE, Command.CERTIFY})


class RunConfig(BaseModel):
    """One command with its flags, validated before anything is loaded."""

    command: Command = Field(description="Command to run")
    input: str | None = Field(default=None, description="Complex or cover file, or a corpus entry name")
    degree: int | None = Field(default=None, ge=0, description="Single degree; all degrees when omitted")
    output_format: OutputFormat = Field(default=OutputFormat.HUMAN)
    verbose: bool = False
    seed: int = 0

    @model_validator(mode="after")
    def check_command_flags(self) -> "RunConfig":
        if self.command is Command.CORPUS:
            if self.input is not None:
                raise ValueError("corpus takes no input")
        elif not self.input:
            raise ValueError(f"{self.command.value} needs an input file or corpus name")
        if self.degree is not None and self.command not in DEGREE_COMMANDS:
            raise ValueError(f"--degree does not apply to {self.command.value}")
        return self
