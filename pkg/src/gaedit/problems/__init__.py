"""Benchmark fitness problems, selectable by string id."""

from gaedit.problems.base import FitnessProblem, decode_real, decode_segments
from gaedit.problems.control import (
    DivergenceError,
    OptimalControl,
    control_fitness,
    simulate_plant,
)
from gaedit.problems.michalewicz import (
    MichalewiczEpistatic,
    michalewicz_epistatic,
    michalewicz_fitness,
    rotate_epistatic,
)
from gaedit.problems.royal_road import RoyalRoadS1, Schema, royal_road_s1, royal_road_schemata

PROBLEMS = {
    RoyalRoadS1.id: RoyalRoadS1,
    OptimalControl.id: OptimalControl,
    MichalewiczEpistatic.id: MichalewiczEpistatic,
}


class UnknownProblemError(KeyError):
    pass


def get_problem(problem_id: str) -> FitnessProblem:
    try:
        return PROBLEMS[problem_id]()
    except KeyError:
        raise UnknownProblemError(
            f"unknown problem {problem_id!r}; expected one of {sorted(PROBLEMS)}"
        ) from None


__all__ = [
    "PROBLEMS",
    "DivergenceError",
    "FitnessProblem",
    "MichalewiczEpistatic",
    "OptimalControl",
    "RoyalRoadS1",
    "Schema",
    "UnknownProblemError",
    "control_fitness",
    "decode_real",
    "decode_segments",
    "get_problem",
    "michalewicz_epistatic",
    "michalewicz_fitness",
    "rotate_epistatic",
    "royal_road_s1",
    "royal_road_schemata",
    "simulate_plant",
]
