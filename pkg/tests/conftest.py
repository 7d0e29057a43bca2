import pytest

from noncross import PointSet, gen_collinear, gen_convex, gen_grid, gen_one_sided, gen_pseudotriangle

SQUARE = PointSet([(0, 0), (2, 0), (2, 2), (0, 2)])
SQUARE_CENTER = PointSet([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
TRIANGLE = PointSet([(0, 0), (3, 0), (0, 3)])


def small_family_instances():
    """Every generated family instance with n <= 8, plus the named sets."""
    instances = {}
    for n in range(3, 9):
        instances[f"convex{n}"] = gen_convex(n)
        instances[f"pseudotriangle{n}"] = gen_pseudotriangle(n)
    for n in range(2, 9):
        instances[f"collinear{n}"] = gen_collinear(n)
    for rows, cols in ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2)):
        instances[f"grid{rows}x{cols}"] = gen_grid(rows, cols)
    for ell, off in ((2, 1), (2, 2), (3, 2), (4, 3), (3, 3), (2, 5)):
        instances[f"one_sided{ell}_{off}"] = gen_one_sided(ell, off)
    instances["square_center"] = SQUARE_CENTER
    instances["triangle"] = TRIANGLE
    return instances


@pytest.fixture(scope="session")
def family_instances():
    return small_family_instances()
