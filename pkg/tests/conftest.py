import pytest

from apolarity_lab import DEFAULT_PRIME, Form, LevelPresentation, PrimeField


@pytest.fixture(scope="session")
def fp():
    return PrimeField(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def fp101():
    return PrimeField(101)


@pytest.fixture(scope="session")
def make_pres():
    """Builds a presentation from (num_vars, degree, [term dict, ...])."""

    def build(field, num_vars, degree, term_dicts):
        gens = tuple(Form(num_vars, degree, dict(t)) for t in term_dicts)
        return LevelPresentation(field, num_vars, degree, gens)

    return build
