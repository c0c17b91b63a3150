from .acyclic import (EdgeGraph, bichromatic_cycles, decode_cycle, is_acyclic_coloring,
                      is_proper, reconstruct_acyclic, run_acyclic, tape_range, theta, theta_inv)
from .generic import (BadEvent, EcInstance, colors_required_generic, instance_colors_required,
                      reconstruct_generic, run_generic)
from .instances import ksat_instance, legit_instance, random_ksat, satisfies
from .projection import project_record, word_str
from .tape import CycleFix, RandomTape, TraceOutcome, Triple, VariableTapes

__all__ = [
    "EdgeGraph", "bichromatic_cycles", "decode_cycle", "is_acyclic_coloring", "is_proper",
    "reconstruct_acyclic", "run_acyclic", "tape_range", "theta", "theta_inv",
    "BadEvent", "EcInstance", "colors_required_generic", "instance_colors_required",
    "reconstruct_generic", "run_generic", "ksat_instance", "legit_instance", "random_ksat",
    "satisfies", "project_record", "word_str", "CycleFix", "RandomTape", "TraceOutcome",
    "Triple", "VariableTapes",
]
