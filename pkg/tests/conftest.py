import pytest

from todim.io import load_fixture


@pytest.fixture(scope="session")
def phf_document():
    return load_fixture("case_study_phf")


@pytest.fixture(scope="session")
def hf_document():
    return load_fixture("case_study_hf")
