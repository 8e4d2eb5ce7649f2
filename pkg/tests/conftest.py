"""Shared fixtures: reference graphs built independently of the library's
own constructors, plus a session-wide cache of family builds."""

import pytest

from polyhex.graphs import Graph
from polyhex.families import build_polyhex, all_specs


def k33_reference() -> Graph:
    return Graph(6, [(a, b) for a in (0, 2, 4) for b in (1, 3, 5)])


def cube_reference() -> Graph:
    return Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                     (4, 5), (5, 6), (6, 7), (7, 4),
                     (0, 4), (1, 5), (2, 6), (3, 7)])


def heawood_reference() -> Graph:
    # the 14-cycle plus the chords i -- i+5 at even i
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(14) if i % 2 == 0]
    return Graph(14, edges)


def petersen_reference() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


def prism_reference(m: int) -> Graph:
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return Graph(2 * m, edges)


def moebius_ladder_reference(m: int) -> Graph:
    edges = [(i, (i + 1) % (2 * m)) for i in range(2 * m)]
    edges += [(i, i + m) for i in range(m)]
    return Graph(2 * m, edges)


@pytest.fixture(scope="session")
def k33():
    return k33_reference()


@pytest.fixture(scope="session")
def cube():
    return cube_reference()


@pytest.fixture(scope="session")
def heawood():
    return heawood_reference()


@pytest.fixture(scope="session")
def petersen():
    return petersen_reference()


@pytest.fixture(scope="session")
def builds():
    """spec -> Embedding for every valid spec with kq <= 20 (shared cache)."""
    return {spec: build_polyhex(spec) for spec in all_specs(20)}


@pytest.fixture(scope="session")
def builds24():
    """spec -> Embedding for every valid spec with kq <= 24 (shared cache)."""
    return {spec: build_polyhex(spec) for spec in all_specs(24)}
