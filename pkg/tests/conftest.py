import pytest
from hypothesis import HealthCheck, settings

from hochster import cone, zoo
from hochster.zoo import boundary_simplex, polygon

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def corpus():
    """Named complexes used across the suites."""
    items = {f"bd{n}": boundary_simplex(n) for n in (2, 3, 4)}
    items.update({f"polygon{m}": polygon(m) for m in range(4, 9)})
    for name in ("O6", "I12", "B5", "B7", "flag9"):
        items[name] = zoo(name)
    return items


def spheres_2d():
    return {name: zoo(name) for name in ("T4", "O6", "I12", "B5", "B7")}


@pytest.fixture(scope="session")
def corpus_complexes():
    return corpus()


@pytest.fixture(scope="session")
def gorenstein_sweep():
    items = corpus()
    items["cone_bd2"] = cone(boundary_simplex(2))
    items["cone_O6"] = cone(zoo("O6"))
    items["torus7"] = zoo("torus7")
    items["bd1"] = boundary_simplex(1)
    return items
