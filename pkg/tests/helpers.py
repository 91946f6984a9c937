from app.models import (Behaviour, InterconnectedSystem, NetworkSystem,
                        SignalSpace, SynthesisProblem)
from app.services.behaviour import full_space, make_behaviour
from app.services.interconnect import equality_network


def rows(space: SignalSpace, *values) -> Behaviour:
    """Строки в порядке схемы; при T=1 допускаются скаляры."""
    return make_behaviour(space, values)


def plant_problem(
    plant_alphabet,
    controller_alphabet,
    spec_rows,
    pc_rows=None,
    free_vars=(),
) -> SynthesisProblem:
    """Объект из одной переменной p и один контроллер c при T=1; pc_rows задаются как (c, p)."""
    p_space = SignalSpace.of(1, p=plant_alphabet)
    c_space = SignalSpace.of(1, c=controller_alphabet)
    joint = p_space.merge(c_space)
    pc = (
        equality_network(joint, ["p", "c"])
        if pc_rows is None
        else make_behaviour(joint, [{"c": c, "p": p} for c, p in pc_rows])
    )
    return SynthesisProblem(
        plant=InterconnectedSystem((full_space(p_space),), NetworkSystem(full_space(p_space))),
        spec=rows(p_space, *spec_rows),
        controller_network=full_space(c_space),
        restriction=full_space(c_space),
        plant_controller_network=pc,
        free_vars=free_vars,
        controller_partition=(("c",),),
    )
