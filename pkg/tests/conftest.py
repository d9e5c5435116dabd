import math

import numpy as np
import pytest
from hypothesis import assume, strategies as st

from cevatri import Triangle

# conditioning floor: tan(omega) = 4 area / (a^2 + b^2 + c^2), at most 1/sqrt(3)
MIN_TAN_OMEGA = 0.03


def triangle_from_points(pts) -> Triangle | None:
    (ax, ay), (bx, by), (cx, cy) = pts
    cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if cross < 0:
        (bx, by), (cx, cy) = (cx, cy), (bx, by)
        cross = -cross
    a = math.hypot(cx - bx, cy - by)
    b = math.hypot(ax - cx, ay - cy)
    c = math.hypot(bx - ax, by - ay)
    if max(a, b, c) < 1e-3 or 2.0 * cross <= MIN_TAN_OMEGA * (a * a + b * b + c * c):
        return None
    return Triangle(a, b, c)


def random_triangle(rng: np.random.Generator, scale: float = 1.0) -> Triangle:
    """A random counterclockwise triangle, rejecting needle-like shapes."""
    while True:
        T = triangle_from_points(rng.uniform(-1.0, 1.0, size=(3, 2)))
        if T is not None:
            return T.scaled(scale) if scale != 1.0 else T


def random_triangles(rng, n, scale=1.0):
    return [random_triangle(rng, scale) for _ in range(n)]


@st.composite
def triangles(draw):
    coord = st.floats(-1.0, 1.0, allow_nan=False)
    pts = [(draw(coord), draw(coord)) for _ in range(3)]
    T = triangle_from_points(pts)
    assume(T is not None)
    return T


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rel_close(x, y, tol=1e-9):
    return abs(x - y) <= tol * max(abs(x), abs(y))


def sides_close(S, T, tol=1e-9):
    return all(rel_close(u, v, tol) for u, v in zip(S, T))


# ------------------------------------------------------- acceptance reporting

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, label = mark.args
    prev = _ACCEPTANCE.get(number, (label, True))
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    _ACCEPTANCE[number] = (label, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        label, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")
