from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr

SymbolIn = StrictInt | StrictStr


class RowsIn(BaseModel):
    """Явный список строк; строка задаётся списком по порядку vars или словарём."""

    model_config = ConfigDict(extra="ignore")

    vars: list[str]
    rows: list[list[Any] | dict[str, Any]]


class UnionIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    union: list["BehaviourIn"] = Field(min_length=1)


class ProductIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    product: list["BehaviourIn"] = Field(min_length=1)


# строка: "full", "full(a,b)", "equality(a,b)" или имя из behaviours
BehaviourIn = Union[str, RowsIn, UnionIn, ProductIn]

UnionIn.model_rebuild()
ProductIn.model_rebuild()


class LiftedIn(BaseModel):
    """Спецификация на других переменных: pi_target([W^T × raw] ∩ network)."""

    model_config = ConfigDict(extra="forbid")

    raw: BehaviourIn
    network: BehaviourIn


class PlantIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    subsystems: list[BehaviourIn] = Field(min_length=1)
    network: BehaviourIn = "full"


class ProblemDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    horizon: int = Field(ge=1)
    variables: dict[str, list[SymbolIn]]
    behaviours: dict[str, BehaviourIn] = {}
    plant: PlantIn
    projections: list[BehaviourIn] | None = None

    spec: BehaviourIn | LiftedIn | None = None
    restriction: BehaviourIn | LiftedIn = "full"
    controller_network: BehaviourIn | None = None
    plant_controller_network: BehaviourIn | None = None
    free_vars: list[str] = []
    controller_partition: list[list[str]] | None = None

    @property
    def missing_problem_fields(self) -> list[str]:
        required = ("spec", "controller_network", "plant_controller_network", "controller_partition")
        return [name for name in required if getattr(self, name) is None]


class ControllersDocument(BaseModel):
    """Файл контроллеров; совместим с JSON-выводом synthesize."""

    model_config = ConfigDict(extra="ignore")

    controllers: list[BehaviourIn] = Field(min_length=1)

