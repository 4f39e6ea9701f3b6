"""Exhaustive sequence sweeps: graphicality tests agree and realizations round-trip."""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest

from dcm_toolkit.domain.matrices import cdcm_of
from dcm_toolkit.domain.sequences import (
    DegreeSequence,
    GoodSequence,
    erdos_gallai_check,
    havel_hakimi,
    realize_good_sequence,
)

LONG_GOOD_SAMPLES = 100


def _degree_sequences(length: int, largest: int) -> list[DegreeSequence]:
    return [
        DegreeSequence(tuple(reversed(values)))
        for values in itertools.combinations_with_replacement(range(largest + 1), length)
    ]


def _good_sequences(length: int) -> list[GoodSequence]:
    found: list[GoodSequence] = []
    for size in range(length):
        for rises in itertools.combinations(range(2, length + 1), size):
            values = [1, *rises]
            values.extend([values[-1]] * (length - len(values)))
            found.append(GoodSequence(tuple(values)))
    return found


def _random_good_sequence(rng: np.random.Generator) -> GoodSequence:
    length = int(rng.integers(9, 41))
    plateau = int(rng.integers(1, length + 1))
    between = np.arange(2, plateau)
    middle = sorted(int(x) for x in rng.permutation(between)[: int(rng.integers(0, len(between) + 1))])
    values = [1, *middle, plateau] if plateau > 1 else [1]
    values.extend([plateau] * (length - len(values)))
    return GoodSequence(tuple(values))


@pytest.mark.os_agnostic
@pytest.mark.slow
@pytest.mark.parametrize("length", range(1, 9))
def test_erdos_gallai_and_havel_hakimi_agree_on_every_short_sequence(length: int) -> None:
    for d in _degree_sequences(length, 7):
        expected = nx.is_graphical(list(d.values), method="eg")
        result = havel_hakimi(d)

        assert erdos_gallai_check(d) is expected, d.values
        assert result.accepted is expected, d.values
        if result.graph is not None:
            assert [result.graph.in_degree(i) for i in range(d.p)] == list(d.values)


@pytest.mark.os_agnostic
@pytest.mark.slow
@pytest.mark.parametrize("length", range(1, 9))
def test_every_short_good_sequence_realizes_as_row_zero(length: int) -> None:
    sequences = _good_sequences(length)

    assert len(sequences) == 2 ** (length - 1)
    for a in sequences:
        assert cdcm_of(realize_good_sequence(a)).row(0) == a.values


@pytest.mark.os_agnostic
@pytest.mark.slow
def test_long_seeded_good_sequences_realize_as_row_zero() -> None:
    rng = np.random.default_rng(20240601)

    for _ in range(LONG_GOOD_SAMPLES):
        a = _random_good_sequence(rng)
        assert cdcm_of(realize_good_sequence(a)).row(0) == a.values
