import time

import pytest

from finsplice import build_pipeline, random_corpus

CORPUS_SEED = 20240801


@pytest.fixture(scope="session")
def corpus():
    """500 random spaces on at most 7 points, with the build time."""
    start = time.perf_counter()
    spaces = random_corpus(500, max_points=7, seed=CORPUS_SEED)
    return spaces, time.perf_counter() - start


@pytest.fixture(scope="session")
def pipelines(corpus):
    spaces, _ = corpus
    return [build_pipeline(space) for space in spaces]


@pytest.fixture(scope="session")
def small_corpus(corpus):
    spaces, _ = corpus
    return spaces[:100]
