import pytest

from orderinv.catalog import build_catalog, default_catalog_spec


@pytest.fixture(scope="session")
def catalog64():
    """The default catalog, built once for the whole test session."""
    return build_catalog(default_catalog_spec())
