import json
from dataclasses import dataclass, field

from app.models.behaviour import Behaviour, Trajectory


@dataclass(frozen=True)
class Problem1Report:
    within_spec: bool
    free: bool
    within_restriction: bool | None
    nonempty: bool
    spec_witnesses: tuple[Trajectory, ...] = ()
    free_witnesses: tuple[Trajectory, ...] = ()
    restriction_witnesses: tuple[Trajectory, ...] = ()

    def passed(self, allow_empty: bool = False) -> bool:
        restriction_ok = self.within_restriction is not False
        return (
            self.within_spec
            and self.free
            and restriction_ok
            and (allow_empty or self.nonempty)
        )


@dataclass(frozen=True)
class OracleSolution:
    controllers: tuple[Behaviour, ...]
    controller_behaviour: Behaviour
    achieved: Behaviour
    family_index: int
    searched: int


@dataclass
class PropertyOutcome:
    name: str
    kind: str
    passed: int = 0
    failed: int = 0
    counterexamples: list[str] = field(default_factory=list)
    files: list[str] = field(default_factory=list)


@dataclass
class SuiteReport:
    seed: int
    cases: int
    outcomes: dict[str, PropertyOutcome] = field(default_factory=dict)

    @property
    def law_failures(self) -> int:
        return sum(o.failed for o in self.outcomes.values() if o.kind == "law")

    @property
    def claim_findings(self) -> int:
        return sum(o.failed for o in self.outcomes.values() if o.kind == "claim")

    def outcome(self, name: str) -> PropertyOutcome:
        return self.outcomes[name]

    def lines(self) -> list[str]:
        result = [f"suite seed={self.seed} cases={self.cases}"]
        for name in sorted(self.outcomes):
            o = self.outcomes[name]
            result.append(f"{o.kind:<5} {name:<48} passed={o.passed} failed={o.failed}")
            for example in o.counterexamples:
                result.extend("    " + line for line in example.splitlines())
        paths = [path for name in sorted(self.outcomes) for path in self.outcomes[name].files]
        trailer = {
            "seed": self.seed,
            "cases": self.cases,
            "law_failures": self.law_failures,
            "claim_findings": self.claim_findings,
            "counterexample_files": paths,
        }
        result.append("# result " + json.dumps(trailer, sort_keys=True))
        return result

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"
