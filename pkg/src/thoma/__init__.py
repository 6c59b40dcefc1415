"""Central measures on partitions, generalized riffle shuffles and RSK."""
from .partitions import Composition, Partition, Tableau, conjugate, dim_hook, partitions_of
from .specialization import ZERO, Finite, Geometric, ThomaParameter, geometric, schur, thoma
from .measures import p_measure, q_measure
from .shuffle_rsk import omega_shuffle, rsk, rsk_shape

__version__ = "0.1.0"

__all__ = [
    "Composition", "Partition", "Tableau", "conjugate", "dim_hook", "partitions_of",
    "ZERO", "Finite", "Geometric", "ThomaParameter", "geometric", "schur", "thoma",
    "p_measure", "q_measure", "omega_shuffle", "rsk", "rsk_shape",
]
