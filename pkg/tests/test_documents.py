import json

import pytest

from app.exceptions import (ParseError, SchemaMismatch, SchemaViolation,
                            UnknownVariable, ValidationError)
from app.models import SignalSpace
from app.repositories.problem import ControllersRepo, ProblemRepo
from app.services.behaviour import full_space
from app.services.problem import ProblemService
from tests.helpers import rows

AB = SignalSpace.of(1, a=(0, 1), b=(0, 1))


def document(**fields):
    data = {"horizon": 1, "variables": {"a": [0, 1], "b": [0, 1]}}
    data.update(fields)
    return ProblemRepo().loads(json.dumps(data))


@pytest.fixture
def service(config) -> ProblemService:
    return ProblemService(config)


def test_references_and_union(service):
    doc = document(
        behaviours={
            "zero": {"vars": ["a"], "rows": [[0]]},
            "one": {"vars": ["a"], "rows": [{"a": 1}]},
            "both": {"union": ["zero", "one"]},
        },
        plant={"subsystems": ["both", "full(b)"], "network": "equality(a,b)"},
    )
    system = service.system(doc)
    assert system.subsystems[0] == full_space(AB.subspace(["a"]))
    assert system.network.behaviour == rows(AB, (0, 0), (1, 1))


def test_product_subsystem(service):
    doc = document(
        plant={"subsystems": [{"product": ["full(a)", {"vars": ["b"], "rows": [[1]]}]}]},
    )
    system = service.system(doc)
    assert system.subsystems[0] == rows(AB, (0, 1), (1, 1))
    assert system.network.is_full
    assert system.network.behaviour == full_space(AB)


def test_longer_horizon_rows(service):
    doc = ProblemRepo().loads(json.dumps({
        "horizon": 2,
        "variables": {"a": ["lo", "hi"]},
        "plant": {"subsystems": [{"vars": ["a"], "rows": [[["lo", "hi"]], [["hi", "hi"]]]}]},
    }))
    behaviour = service.system(doc).subsystems[0]
    # "hi" < "lo" в алфавите
    assert behaviour.rows == ((("hi", "hi"),), (("lo", "hi"),))


def test_lifted_spec(service):
    doc = ProblemRepo().loads(json.dumps({
        "horizon": 1,
        "variables": {"p": [0, 1], "y": [0, 1], "c": [0, 1]},
        "plant": {"subsystems": ["full(p)"]},
        "spec": {"raw": {"vars": ["y"], "rows": [[1]]}, "network": "equality(p,y)"},
        "controller_network": "full",
        "plant_controller_network": "equality(p,c)",
        "controller_partition": [["c"]],
    }))
    problem = service.problem(doc)
    assert problem.spec == rows(SignalSpace.of(1, p=(0, 1)), (1,))
    assert problem.restriction == full_space(problem.controller_space)


def test_fixture_problem_with_root(config, fixtures):
    service = ProblemService(config, root=fixtures)
    doc = service.load("w1.json")
    problem = service.problem(doc)
    assert list(problem.w_p) == ["p"]
    assert service.load_controllers(doc, "w1_controllers.json") == [
        rows(SignalSpace.of(1, c=(0, 1)), (0,))
    ]


def test_missing_problem_fields(service):
    doc = document(plant={"subsystems": ["full(a)", "full(b)"]})
    assert doc.missing_problem_fields == [
        "spec", "controller_network", "plant_controller_network", "controller_partition",
    ]
    with pytest.raises(ValidationError):
        service.problem(doc)


@pytest.mark.parametrize(
    "behaviours, subsystem, error",
    [
        ({"x": "y", "y": "x"}, "x", ValidationError),
        ({}, "nothing", ValidationError),
        ({}, "full", ValidationError),
        ({}, {"vars": ["z"], "rows": []}, UnknownVariable),
        ({}, {"vars": ["a"], "rows": [[0, 1]]}, SchemaMismatch),
        ({}, {"vars": ["a", "a"], "rows": []}, SchemaMismatch),
        ({}, {"vars": ["a"], "rows": [[True]]}, SchemaViolation),
        ({}, {"vars": ["a"], "rows": [[2]]}, SchemaViolation),
    ],
)
def test_invalid_behaviour_expressions(service, behaviours, subsystem, error):
    doc = document(behaviours=behaviours, plant={"subsystems": [subsystem]})
    with pytest.raises(error):
        service.system(doc)


def test_cycle_is_named(service):
    doc = document(behaviours={"x": "y", "y": "x"}, plant={"subsystems": ["x"]})
    with pytest.raises(ValidationError, match="x -> y -> x"):
        service.system(doc)


def test_projections_must_match_subsystems(service):
    doc = document(plant={"subsystems": ["full(a)", "full(b)"]}, projections=["full(a)"])
    with pytest.raises(ValidationError):
        service.projections(doc, service.system(doc))

    swapped = document(plant={"subsystems": ["full(a)", "full(b)"]}, projections=["full(b)", "full(a)"])
    with pytest.raises(SchemaMismatch):
        service.projections(swapped, service.system(swapped))


@pytest.mark.parametrize(
    "data",
    [
        {"horizon": 0, "variables": {"a": [0]}, "plant": {"subsystems": ["full(a)"]}},
        {"horizon": 1, "variables": {"a": [True]}, "plant": {"subsystems": ["full(a)"]}},
        {"horizon": 1, "variables": {"a": [0]}, "plant": {"subsystems": []}},
        {"horizon": 1, "variables": {"a": [0]}, "plant": {"subsystems": ["full(a)"]}, "extra": 1},
    ],
)
def test_invalid_documents(data):
    with pytest.raises(ParseError) as info:
        ProblemRepo().loads(json.dumps(data), source="doc.json")
    assert str(info.value).startswith("doc.json: field ")


def test_invalid_json():
    with pytest.raises(ParseError, match="line 2"):
        ProblemRepo().loads('{"horizon": 1,\n ]')


def test_missing_file(service, tmp_path):
    with pytest.raises(ParseError):
        service.load(tmp_path / "absent.json")


def test_controllers_document_needs_controllers():
    with pytest.raises(ParseError):
        ControllersRepo().loads('{"controllers": []}')


@pytest.mark.parametrize("name", ["w1.json", "w2.json", "compose.json", "infeasible.json"])
def test_document_round_trip(fixtures, name):
    repo = ProblemRepo(fixtures)
    doc = repo.get(name)
    assert repo.loads(doc.model_dump_json()) == doc
