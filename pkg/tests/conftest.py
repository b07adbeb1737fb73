import pytest

from tilewave import build_basis, triangle_rectangle_tiling


@pytest.fixture(scope="session")
def tiling():
    return triangle_rectangle_tiling()


@pytest.fixture(scope="session")
def tri_basis(tiling):
    """Triangle basis from the (6, 6) index box: six folded modes."""
    return build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)


@pytest.fixture(scope="session")
def rect_basis():
    """Separable sine basis from the (6, 6) index box on the rectangle."""
    return build_basis("rectangle", max_k=(6, 6))
