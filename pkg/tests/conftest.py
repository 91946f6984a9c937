from pathlib import Path

import pytest

from app.config.settings import Settings
from app.models import InterconnectedSystem, NetworkSystem, SignalSpace, SynthesisProblem
from app.services.behaviour import full_space
from app.services.interconnect import equality_network
from tests.helpers import plant_problem, rows

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def config() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def w1() -> SynthesisProblem:
    return plant_problem((0, 1), (0, 1), [(0,)])


@pytest.fixture
def w2() -> SynthesisProblem:
    return plant_problem((0, 1, 2), (0, 1), [(0,), (1,)], pc_rows=[(0, 0), (1, 1), (1, 2)])


@pytest.fixture
def equality_system() -> InterconnectedSystem:
    space = SignalSpace.of(1, w1=(0, 1), w2=(0, 1))
    return InterconnectedSystem(
        (
            full_space(space.subspace(["w1"])),
            rows(space.subspace(["w2"]), (0,)),
        ),
        NetworkSystem(equality_network(space, ["w1", "w2"])),
    )
