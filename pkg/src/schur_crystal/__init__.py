"""Partitions with bounded multiplicities around multiples of an odd modulus p,
the crystal structure on them, and the partition identities they produce."""

from .partitions import OddModulus, Partition, format_partition, parse_partition
from .sp_class import enumerate_sp, in_sp
from .sp_crystal import SpCrystal, sp_lower, sp_raise

__all__ = [
    "OddModulus",
    "Partition",
    "SpCrystal",
    "enumerate_sp",
    "format_partition",
    "in_sp",
    "parse_partition",
    "sp_lower",
    "sp_raise",
]
