"""Executable cancellation procedures for Laurent polynomial rings."""
from .characterize import Verdict, characterize_laurent
from .dispatch import CancelReport, laurent_cancel
from .maps import AlgebraMap, HypothesisLedger, Isomorphism, LaurentHom, LedgerEntry, identity_map
from .normalize import NormalizationStep, NormalizationTrace, localized_normalize, unit_normalize
from .reconstruct import IsoReport, reconstruct_iso
from .torus import TorusCancellation, bg_cancel, standard_torus

__all__ = [
    "AlgebraMap",
    "CancelReport",
    "HypothesisLedger",
    "IsoReport",
    "Isomorphism",
    "LaurentHom",
    "LedgerEntry",
    "NormalizationStep",
    "NormalizationTrace",
    "TorusCancellation",
    "Verdict",
    "bg_cancel",
    "characterize_laurent",
    "identity_map",
    "laurent_cancel",
    "localized_normalize",
    "reconstruct_iso",
    "standard_torus",
    "unit_normalize",
]
