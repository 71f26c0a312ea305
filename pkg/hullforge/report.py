"""JSON report envelope shared by every subcommand."""
import hashlib
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from hullforge import __version__
from hullforge.errors import InputError
from hullforge.gf import FieldSpec


def fraction_to_json(value: Fraction) -> Dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def fraction_from_json(data: Dict[str, int]) -> Fraction:
    return Fraction(data["num"], data["den"])


def input_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ReportEnvelope:
    command: str
    field: Dict[str, Any]
    result: Dict[str, Any]
    input_digest: Optional[str] = None
    tool_version: str = __version__

    @classmethod
    def build(cls, command: str, spec: FieldSpec, result: Dict[str, Any],
              source_text: Optional[str] = None) -> 'ReportEnvelope':
        return cls(
            command=command,
            field=spec.describe(),
            result=result,
            input_digest=input_digest(source_text) if source_text is not None else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> 'ReportEnvelope':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"Invalid report: {e}")
        return cls(**{k: v for k, v in data.items() if k in cls.__annotations__})
