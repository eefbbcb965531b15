import pytest

from homflygamma.poly import PolyMZ, PolyMu


def mz(spec: dict) -> PolyMZ:
    return PolyMZ(spec)


@pytest.fixture
def trefoil_gamma():
    # 1 + mu*z + z^2
    return PolyMZ({(0, 0): 1, (1, 1): 1, (0, 2): 1})


def mu_poly(*coeffs) -> PolyMu:
    return PolyMu({(i,): c for i, c in enumerate(coeffs)})
