import os
from fractions import Fraction

import pytest

from algebra import FreeComplex, LaurentPoly
from torus import Placement
from utils.document_manager import ComplexDocumentManager

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "complexes")


def document_path(name: str) -> str:
    return os.path.join(DATA_DIR, f"{name}.json")


def load(name: str):
    manager = ComplexDocumentManager(document_path(name))
    return manager.get_complex(), manager.get_placement()


@pytest.fixture
def origami():
    """f = 1+x+y, g = 1+z+xy in T^3."""
    return load("origami")


@pytest.fixture
def line():
    """Two quadrinomials with the colinear placement; x_2 and x_3 collide."""
    return load("line")


@pytest.fixture
def dimer():
    """Square grid on T^2 with weights 1, 2, 3, 5, 7, 11, 13, 17."""
    return load("dimer")


@pytest.fixture
def crossing():
    return load("crossing")


@pytest.fixture
def star():
    return load("star")


@pytest.fixture
def point():
    """Koszul resolution of (2, 3) with the half-cube placement."""
    return load("point")


@pytest.fixture
def zm():
    """R --z^m--> R, black at the origin, white at (1/2, 1/2), m = (1, 0)."""
    F = FreeComplex(2, {"b": -1, "w": 0}, {("w", "b"): LaurentPoly.monomial((1, 0))})
    P = Placement({"b": (0, 0), "w": (Fraction(1, 2), Fraction(1, 2))})
    return F, P


@pytest.fixture
def document():
    """Path of a bundled document by name."""
    return document_path
