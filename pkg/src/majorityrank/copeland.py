"""Copeland scores and the rankings they induce.

Three scoring versions exist; with L(x)/D(x) the lower/upper sections:

* version 1: ``|L(x)| - |D(x)|`` (wins minus losses),
* version 2: ``|L(x)|`` (wins),
* version 3: ``m - |D(x)|`` (non-losses).

They induce identical rankings whenever the majority relation has no ties;
with ties present they may disagree.  Pointwise, ``s1 = s2 + s3 - m``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .core import DENSE, Ranking, from_scores
from .errors import InputError
from .majority import MajorityStructure

VERSIONS = (1, 2, 3)


@dataclass(frozen=True)
class ScoreVector:
    version: int
    scores: Mapping[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "scores", MappingProxyType(dict(self.scores)))


def copeland_scores(ms: MajorityStructure, version: int) -> ScoreVector:
    """Copeland scores of every alternative under the chosen version."""
    if version not in VERSIONS:
        raise InputError(f"Copeland version must be one of {VERSIONS}, got {version!r}")
    m = len(ms)
    wins = ms.beats.sum(axis=1)
    losses = ms.beats.sum(axis=0)
    if version == 1:
        values = wins - losses
    elif version == 2:
        values = wins
    else:
        values = m - losses
    scores = {name: int(values[i]) for i, name in enumerate(ms.alternatives)}
    return ScoreVector(version=version, scores=scores)


def copeland_ranking(ms: MajorityStructure, version: int, scheme: str = DENSE) -> Ranking:
    """Rank alternatives by decreasing Copeland score; equal scores tie."""
    vector = copeland_scores(ms, version)
    return from_scores(ms.alternatives, {a: float(s) for a, s in vector.scores.items()}, scheme=scheme)
