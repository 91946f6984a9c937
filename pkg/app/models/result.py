from dataclasses import dataclass, field
from enum import Enum

from app.models.behaviour import Behaviour, Trajectory
from app.models.report import Problem1Report


class FastPath(str, Enum):
    NONE = "none"
    WP_OBSERVABLE = "wp_observable"
    WC_OBSERVABLE = "wc_observable"


@dataclass(frozen=True)
class AuxiliarySets:
    out: Behaviour
    ex: Behaviour
    inner: Behaviour
    xi: Behaviour


@dataclass(frozen=True)
class ExistenceVerdict:
    free_values_covered: bool
    plant_free: bool
    # значения w_f, нарушающие условие
    uncovered_free_values: tuple[Trajectory, ...] = ()
    missing_free_values: tuple[Trajectory, ...] = ()

    @property
    def exists(self) -> bool:
        return self.free_values_covered and self.plant_free


@dataclass(frozen=True)
class ControllerDiagnostics:
    residual_rows: Behaviour | None = None
    decomposes: bool = True
    padded: bool = False
    # заполняются, только если блоки не восстанавливают pi_c(B_in)
    achieved: Behaviour | None = None
    check: Problem1Report | None = None

    @property
    def controllers_valid(self) -> bool:
        return self.check is None or self.check.passed()


@dataclass(frozen=True)
class SynthesisResult:
    desired: Behaviour
    auxiliary: AuxiliarySets
    verdict: ExistenceVerdict
    controlled: Behaviour
    controllers: tuple[Behaviour, ...]
    fast_path: FastPath = FastPath.NONE
    multiplicities: Behaviour | None = None
    diagnostics: ControllerDiagnostics = field(default_factory=ControllerDiagnostics)

    @property
    def exists(self) -> bool:
        return self.verdict.exists

    @property
    def constructive(self) -> bool:
        """Вердикт истинен и возвращённые контроллеры действительно решают задачу."""
        return self.exists and self.diagnostics.controllers_valid

    @property
    def sacrificed(self) -> Behaviour:
        """Желаемые траектории w_p, которые реализовать не удалось."""
        from app.services.algebra import difference, project

        return difference(project(self.desired, self.controlled.names), self.controlled)
