import random
from fractions import Fraction

import pytest

from straightplanes.bodies import Disk, Polygon
from straightplanes.metric import EuclideanPlane, HilbertPlane
from straightplanes.planar import PlanarPoint


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture(scope="session")
def unit_disk():
    return Disk(PlanarPoint(0.0, 0.0), 1.0)


@pytest.fixture(scope="session")
def square_2():
    return Polygon(
        (
            PlanarPoint(Fraction(-1), Fraction(-1)),
            PlanarPoint(Fraction(1), Fraction(-1)),
            PlanarPoint(Fraction(1), Fraction(1)),
            PlanarPoint(Fraction(-1), Fraction(1)),
        )
    )


@pytest.fixture(scope="session")
def disk_plane(unit_disk):
    return HilbertPlane(unit_disk)


@pytest.fixture(scope="session")
def euclid():
    return EuclideanPlane()
