import pytest

from assocforms.cit import catalogue


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    # every test session synthesizes into its own cache directory
    path = tmp_path_factory.mktemp("assocforms-cache")
    catalogue.set_cache_dir(path)
    yield path
    catalogue.set_cache_dir(None)
