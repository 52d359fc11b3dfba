from typing import Dict, Union

from nature_opt.algorithms.base import Metaheuristic
from nature_opt.algorithms.bat import BatAlgorithm, ba_step
from nature_opt.algorithms.bee_colony import (
    ArtificialBeeColony,
    abc_selection_probabilities,
    abc_step,
)
from nature_opt.algorithms.black_hole import BlackHole, bh_step
from nature_opt.algorithms.cuckoo import CuckooSearch, cs_step
from nature_opt.algorithms.firefly import Firefly, fa_step
from nature_opt.algorithms.flower import FlowerPollination, fpa_step
from nature_opt.algorithms.harmony import (
    HarmonySearch,
    ImprovedHarmonySearch,
    ParameterSettingFreeHarmonySearch,
    hs_step,
    ihs_schedule,
    ihs_step,
    psfhs_rates,
    psfhs_step,
)
from nature_opt.algorithms.levy import levy_flight, mantegna_sigma
from nature_opt.algorithms.migrating_birds import MigratingBirds, mbo_step
from nature_opt.algorithms.pso import (
    AdaptiveInertiaParticleSwarm,
    ParticleSwarm,
    adaptive_inertia,
    aiwpso_step,
    pso_step,
)
from nature_opt.algorithms.water_cycle import WaterCycle, wca_stream_allocation, wca_step
from nature_opt.params import Technique, to_technique

ALGORITHMS: Dict[Technique, Metaheuristic] = {
    algorithm.technique: algorithm
    for algorithm in (
        ParticleSwarm(),
        AdaptiveInertiaParticleSwarm(),
        BatAlgorithm(),
        FlowerPollination(),
        Firefly(),
        CuckooSearch(),
        BlackHole(),
        MigratingBirds(),
        ArtificialBeeColony(),
        WaterCycle(),
        HarmonySearch(),
        ImprovedHarmonySearch(),
        ParameterSettingFreeHarmonySearch(),
    )
}


def get_algorithm(technique: Union[str, Technique]) -> Metaheuristic:
    return ALGORITHMS[to_technique(technique)]


__all__ = [
    "ALGORITHMS",
    "Metaheuristic",
    "get_algorithm",
    "levy_flight",
    "mantegna_sigma",
    "adaptive_inertia",
    "ihs_schedule",
    "psfhs_rates",
    "wca_stream_allocation",
    "abc_selection_probabilities",
    "pso_step",
    "aiwpso_step",
    "ba_step",
    "fpa_step",
    "fa_step",
    "cs_step",
    "bh_step",
    "mbo_step",
    "abc_step",
    "wca_step",
    "hs_step",
    "ihs_step",
    "psfhs_step",
]
