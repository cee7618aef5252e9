"""Find and certify pairs of cycles whose lengths differ by one or two."""

from .certificate import GoodPairCertificate, verify_certificate
from .cycles import Cycle, find_feasible_cycle
from .engine import EngineConfig, ReductionTrace, f, find_good_pair
from .errors import BudgetExhausted
from .graph import Graph, from_edge_list
from .oracle import OracleBudget, cycle_spectrum, good_pair_oracle

__all__ = [
    "BudgetExhausted",
    "Cycle",
    "EngineConfig",
    "GoodPairCertificate",
    "Graph",
    "OracleBudget",
    "ReductionTrace",
    "cycle_spectrum",
    "f",
    "find_feasible_cycle",
    "find_good_pair",
    "from_edge_list",
    "good_pair_oracle",
    "verify_certificate",
]
