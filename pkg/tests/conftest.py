"""Shared fixtures: the corpus of small programs and graph generators."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from groundsub import (
    EdgeTag,
    LabeledDigraph,
    parse_declarations,
    run,
    transitive_reduction,
)

# Small programs covering the interesting shapes: a lone generic class, a
# generic beside a plain class, two unrelated generics, a generic subclass
# passing its parameter through, and a plain hierarchy with one generic leaf.
CORPUS = {
    "one_generic": "class C<T> {}",
    "plain_and_generic": "class C {}  // class C is non-generic\nclass D<T> {}",
    "two_generics": "class C<T> {}\nclass D<T> {}",
    "passthrough": "class C<T> {}\nclass E<T> extends C<T> {}",
    "mixed_hierarchy": (
        "class C {}\nclass E extends C {}\nclass D {}\nclass F<T> extends D {}"
    ),
}

NUMBERS_SOURCE = "class Number {}\nclass Integer extends Number {}\nclass List<T> {}"

ALL_PLAIN_SOURCE = "class C {}\nclass E extends C {}\nclass D {}\nclass F extends D {}"


@pytest.fixture(scope="session")
def tables():
    return {name: parse_declarations(src) for name, src in CORPUS.items()}


@pytest.fixture(scope="session")
def traces(tables):
    """Depth-3 construction for every corpus program, built once."""
    return {name: run(table, 3) for name, table in tables.items()}


@pytest.fixture(scope="session")
def numbers_table():
    return parse_declarations(NUMBERS_SOURCE)


def random_reduced_dag(rng: random.Random, prefix: str, max_vertices: int = 8) -> LabeledDigraph:
    """Seeded random DAG in Hasse form with tagged edges."""
    n = rng.randint(1, max_vertices)
    labels = [f"{prefix}{i}" for i in range(n)]
    tags = list(EdgeTag)
    edges = [
        (labels[i], labels[j], rng.choice(tags))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.35
    ]
    return transitive_reduction(LabeledDigraph.from_edges(edges, vertices=labels))


@st.composite
def dags(draw, max_vertices: int = 7, reduced: bool = False):
    """Hypothesis strategy for DAGs over a fixed topological order."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    labels = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                tag = draw(st.sampled_from(list(EdgeTag)))
                edges.append((labels[i], labels[j], tag))
    g = LabeledDigraph.from_edges(edges, vertices=labels)
    return transitive_reduction(g) if reduced else g
