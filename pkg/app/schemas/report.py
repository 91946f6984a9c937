from pydantic import BaseModel, ConfigDict

from app.models.behaviour import Behaviour
from app.schemas.problem import SymbolIn


class BehaviourOut(BaseModel):
    # тот же вид, что и RowsIn, поэтому вывод можно подать обратно на вход
    vars: list[str]
    horizon: int
    rows: list[list[list[SymbolIn]]]

    @classmethod
    def of(cls, behaviour: Behaviour) -> "BehaviourOut":
        return cls(
            vars=list(behaviour.names),
            horizon=behaviour.horizon,
            rows=[[list(sequence) for sequence in row] for row in behaviour.rows],
        )


class VerdictOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    exists: bool
    free_values_covered: bool
    plant_free: bool
    uncovered_free_values: list[list[list[SymbolIn]]]
    missing_free_values: list[list[list[SymbolIn]]]


class Problem1Out(BaseModel):
    passed: bool
    within_spec: bool
    free: bool
    within_restriction: bool | None
    nonempty: bool
    spec_witnesses: list[list[list[SymbolIn]]]
    free_witnesses: list[list[list[SymbolIn]]]
    restriction_witnesses: list[list[list[SymbolIn]]]


class SynthesisOut(BaseModel):
    desired: BehaviourOut
    out: BehaviourOut
    ex: BehaviourOut
    inner: BehaviourOut
    xi: BehaviourOut
    verdict: VerdictOut
    controlled: BehaviourOut
    controllers: list[BehaviourOut]
    sacrificed: BehaviourOut
    multiplicities: BehaviourOut | None
    fast_path: str
    residual_controller_rows: BehaviourOut | None
    controllers_decompose: bool
    controllers_valid: bool
    constructive: bool
    achieved_by_controllers: BehaviourOut | None
    controllers_check: Problem1Out | None
    padded: bool


class VerifyOut(BaseModel):
    achieved: BehaviourOut
    report: Problem1Out


class OracleOut(BaseModel):
    found: bool
    searched: int | None = None
    family_index: int | None = None
    controllers: list[BehaviourOut] = []
    controller_behaviour: BehaviourOut | None = None
    achieved: BehaviourOut | None = None


class ReconstructOut(BaseModel):
    mode: str
    projections: list[BehaviourOut]
    reconstructed: BehaviourOut
    composed: BehaviourOut
    equal: bool


class PropertyOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    name: str
    kind: str
    passed: int
    failed: int
    counterexamples: list[str]
    files: list[str]


class SuiteOut(BaseModel):
    seed: int
    cases: int
    law_failures: int
    claim_findings: int
    properties: list[PropertyOut]


class HankelOut(BaseModel):
    L: int
    rows: int
    cols: int
    rank: int
    matrix: list[list[str]]
    free_blocks: list[int] | None = None
    free_rows_full_rank: bool | None = None
    query: list[str] | None = None
    query_in_span: bool | None = None
