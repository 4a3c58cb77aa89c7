"""Repetition codes, the three-qubit bit-flip code and Kraus channels."""

from .bitflip import (
    Syndrome,
    apply_flip,
    correct,
    decode,
    encode_bitflip,
    run_bitflip_pipeline,
    syndrome_extract,
)
from .channels import DensityMatrix, KrausChannel, apply_channel, to_density
from .repetition import RepetitionStats, ratio_checks, repetition_stats

__all__ = [
    "DensityMatrix",
    "KrausChannel",
    "RepetitionStats",
    "Syndrome",
    "apply_channel",
    "apply_flip",
    "correct",
    "decode",
    "encode_bitflip",
    "ratio_checks",
    "repetition_stats",
    "run_bitflip_pipeline",
    "syndrome_extract",
    "to_density",
]
