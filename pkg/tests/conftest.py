import pytest

from iasi.harness import generate_corpus, run_suite


@pytest.fixture(scope="session")
def corpus5():
    return generate_corpus(n_max=5, seed=0)


@pytest.fixture(scope="session")
def suite5(corpus5):
    return run_suite(corpus5)
