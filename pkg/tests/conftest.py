import pytest

from fiblift.fibrations import (
    CodomainFibration,
    FamCatFibration,
    FamSetFibration,
    TotalMor,
)
from fiblift.kernel.finset import FinMap, FinSet, identity


@pytest.fixture(scope="session")
def cod():
    return CodomainFibration()


@pytest.fixture(scope="session")
def fam_set():
    return FamSetFibration()


@pytest.fixture(scope="session")
def fam_cat():
    return FamCatFibration()


@pytest.fixture(scope="session")
def empty_point(cod):
    """The generating family (empty set -> point) over the terminal base."""
    one = FinSet(1)
    U = FinMap(FinSet(0), one, ())
    V = FinMap(FinSet(1), one, (0,))
    return cod.vertical(U, V, cod.fiber_mors(U, V)[0])


@pytest.fixture(scope="session")
def two_to_one(cod):
    one = FinSet(1)
    X = FinMap(FinSet(2), one, (0, 0))
    Y = FinMap(FinSet(1), one, (0,))
    return cod.vertical(X, Y, cod.fiber_mors(X, Y)[0])


@pytest.fixture(scope="session")
def delta0(cod):
    one = FinSet(1)
    dom = FinMap(FinSet(1), one, (0,))
    codm = FinMap(FinSet(2), one, (0, 0))
    return cod.vertical(dom, codm,
                        TotalMor(dom, codm, identity(one),
                                 FinMap(FinSet(1), FinSet(2), (0,))))


@pytest.fixture(scope="session")
def classifier2(cod):
    """The classifier-shaped generator over a two-element base."""
    I2 = FinSet(2)
    U = FinMap(FinSet(1), I2, (0,))
    V = identity(I2)
    return cod.vertical(U, V, TotalMor(U, V, identity(I2),
                                       FinMap(FinSet(1), FinSet(2), (0,))))
