import pytest

from adrlab.adr import ADRData
from adrlab.fields import Field
from adrlab.generators import brauer_line_presentation, linear_quiver_presentation
from adrlab.presentation import AlgebraBasis
from adrlab.qh import LabelPoset, QHContext


@pytest.fixture(scope="session")
def brauer3():
    return AlgebraBasis(brauer_line_presentation(3))


@pytest.fixture(scope="session")
def adr3(brauer3):
    return ADRData(brauer3)


@pytest.fixture(scope="session")
def ctx3(adr3):
    poset = LabelPoset.adr(adr3.labels, adr3.presentation.quiver.vertices)
    return QHContext(adr3.basis, poset, adaptedness="proved (ADR)", adr_data=adr3)


@pytest.fixture(scope="session")
def adr4():
    return ADRData(AlgebraBasis(brauer_line_presentation(4)))


@pytest.fixture(scope="session")
def ctx4(adr4):
    poset = LabelPoset.adr(adr4.labels, adr4.presentation.quiver.vertices)
    return QHContext(adr4.basis, poset, adaptedness="proved (ADR)", adr_data=adr4)


@pytest.fixture(scope="session")
def linear3():
    return AlgebraBasis(linear_quiver_presentation(3))


@pytest.fixture(scope="session")
def linear3_ctx(linear3):
    return QHContext(linear3, LabelPoset.natural(3, linear3.quiver.vertices))


@pytest.fixture(scope="session")
def gf5():
    return Field(5)
