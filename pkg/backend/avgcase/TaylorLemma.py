import logging

import sympy

from backend.core.FunctionSpecError import FunctionSpecError

MAX_TAYLOR_THETA = 8

logger = logging.getLogger("colloq.avgcase")

x = sympy.Symbol("x")


def default_grid():
    return [sympy.Rational(k, 20) for k in range(1, 20)]


def taylor_sides(theta, point):
    """Return the exact (derivative side, closed-form side) at a rational point.

    The derivative side is the (theta-1)-th derivative of x^theta / (1 - x);
    the closed form is (theta - 1)! (1 / (1 - x)^theta - 1).
    """
    if theta < 1:
        raise FunctionSpecError("theta must be a positive integer, got %r." % (theta,))
    point = sympy.Rational(point)
    if not 0 < point < 1:
        raise FunctionSpecError("Grid points must lie in (0, 1), got %s." % point)
    derivative = x ** theta / (1 - x)
    if theta > 1:
        derivative = sympy.diff(derivative, x, theta - 1)
    closed_form = sympy.factorial(theta - 1) * (1 / (1 - x) ** theta - 1)
    return derivative.subs(x, point), closed_form.subs(x, point)


def check_taylor_lemma(theta_max, grid=None, theta_min=1):
    """Largest |derivative side - closed-form side| over theta = theta_min..theta_max and the grid."""
    if not 1 <= theta_max <= MAX_TAYLOR_THETA:
        raise FunctionSpecError("theta_max must lie in 1..%d, got %r." % (MAX_TAYLOR_THETA, theta_max))
    if not 1 <= theta_min <= theta_max:
        raise FunctionSpecError("theta_min must lie in 1..%d, got %r." % (theta_max, theta_min))
    grid = default_grid() if grid is None else [sympy.Rational(point) for point in grid]

    worst = sympy.Integer(0)
    for theta in range(theta_min, theta_max + 1):
        for point in grid:
            derivative, closed_form = taylor_sides(theta, point)
            worst = max(worst, abs(derivative - closed_form))
    logger.info("Derivative identity checked for theta=%d..%d on %d points, max error %s.", theta_min, theta_max, len(grid), worst)
    return float(worst)
