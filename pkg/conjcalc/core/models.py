from typing import List, Optional, Tuple

import orjson
from pydantic import BaseModel, Field, validator

from conjcalc.core import utils
from conjcalc.core.semigroup import FiniteSemigroup, validate


class SemigroupModel(BaseModel):
    """Semigroup JSON: element labels and a row-major Cayley table"""

    elements: List[str] = Field(..., min_items=1)
    table: List[List[int]]

    @classmethod
    def from_file(cls, path: str) -> "SemigroupModel":
        return cls.parse_obj(utils.load_json(path))

    @classmethod
    def from_semigroup(cls, S: FiniteSemigroup) -> "SemigroupModel":
        return cls(**S.to_dict())

    def to_semigroup(self) -> FiniteSemigroup:
        return validate(self.elements, self.table)


class ReesModel(BaseModel):
    """Rees spec JSON; "0" in P marks a zero entry"""

    group: SemigroupModel
    I: int = Field(..., ge=1)
    Lambda: int = Field(..., ge=1)
    P: List[List[str]]
    with_zero: bool = True

    @classmethod
    def from_file(cls, path: str) -> "ReesModel":
        return cls.parse_obj(utils.load_json(path))

    @validator("P")
    def sandwich_is_rectangular(cls, v, values):
        if "Lambda" in values and len(v) != values["Lambda"]:
            raise ValueError(
                f"P needs {values['Lambda']} rows, one per Lambda index"
            )
        if "I" in values and any(len(row) != values["I"] for row in v):
            raise ValueError(f"Every row of P needs {values['I']} entries")
        return v


class GraphModel(BaseModel):
    """Graph JSON: vertex names and (edge, source, range) triples"""

    vertices: List[str] = Field(..., min_items=1)
    edges: List[Tuple[str, str, str]] = []

    @classmethod
    def from_file(cls, path: str) -> "GraphModel":
        return cls.parse_obj(utils.load_json(path))


class GraphElementModel(BaseModel):
    """A graph inverse semigroup element x y^-1; "@v" names a vertex path"""

    x: List[str] = Field(..., min_items=1)
    y: List[str] = Field(..., min_items=1)

    @classmethod
    def from_string(cls, text: str) -> Optional["GraphElementModel"]:
        """Parse an element literal; "0" is the zero and gives None"""

        if text.strip() == "0":
            return None
        return cls.parse_obj(orjson.loads(text))


class NatMapModel(BaseModel):
    """Eventually-shift map JSON: f(n) = table[n] below len(table), n + shift
    from there on"""

    table: List[int] = []
    shift: int = 0

    @validator("table", each_item=True)
    def values_are_natural(cls, v):
        if v < 0:
            raise ValueError("Table values must be nonnegative")
        return v

    @classmethod
    def from_string(cls, text: str) -> "NatMapModel":
        return cls.parse_obj(orjson.loads(text))


class FiniteMapModel(BaseModel):
    """Map literal: list of images, None (null) where undefined"""

    images: List[Optional[int]]

    @classmethod
    def from_string(cls, text: str) -> "FiniteMapModel":
        return cls(images=orjson.loads(text))

    @validator("images", each_item=True)
    def images_are_natural(cls, v):
        if v is not None and v < 0:
            raise ValueError("Images must be nonnegative")
        return v
