"""Infinitesimal perturbations and their removal."""

from sabar.infinitesimals.eps import (
    CoefficientDecomposition,
    EpsPoly,
    decompose,
    eps_index,
    eps_name,
    is_eps,
    lemma_check,
    remove_infinitesimals,
)

__all__ = [
    "CoefficientDecomposition",
    "EpsPoly",
    "decompose",
    "eps_index",
    "eps_name",
    "is_eps",
    "lemma_check",
    "remove_infinitesimals",
]
