from __future__ import annotations

import random

import pytest

from ldsramsey import Color, TwoColoring, all_pairs


def random_complete_coloring(r: int, rng: random.Random) -> TwoColoring:
    coloring = TwoColoring(r)
    for i, j in all_pairs(r):
        coloring.set_edge(i, j, rng.choice((Color.RED, Color.BLUE)))
    return coloring


def coloring_from_red_edges(r: int, red: set[tuple[int, int]]) -> TwoColoring:
    """Complete coloring with the listed pairs red and everything else blue."""
    canon = {tuple(sorted(e)) for e in red}
    coloring = TwoColoring(r)
    for i, j in all_pairs(r):
        coloring.set_edge(i, j, Color.RED if (i, j) in canon else Color.BLUE)
    return coloring


def relabeled(coloring: TwoColoring, perm: list[int]) -> TwoColoring:
    out = TwoColoring(coloring.r)
    for i, j in all_pairs(coloring.r):
        out.set_edge(perm[i], perm[j], coloring.get_edge(i, j))
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
