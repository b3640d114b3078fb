import sympy

from backend.core.FunctionSpecError import FunctionSpecError

Y = sympy.Symbol("Y")


class GenPoly:
    """The generating polynomial prod_i (1 + Y + ... + Y^{m_i}) with exact integer coefficients.

    Coefficient j counts the measurement vectors over the alphabets whose entries sum to j.
    """

    def __init__(self, alphabet):
        self._alphabet = tuple(int(m) for m in alphabet)
        if any(m < 0 for m in self._alphabet):
            raise FunctionSpecError("Alphabet sizes must be non-negative, got %s." % (self._alphabet,))

        product = sympy.Poly(1, Y)
        for m in self._alphabet:
            product = product * sympy.Poly.from_list([1] * (m + 1), Y)
        self._coefficients = tuple(int(c) for c in reversed(product.all_coeffs()))

    def alphabet(self):
        return self._alphabet

    def degree(self):
        return len(self._coefficients) - 1

    def coefficients(self):
        return self._coefficients

    def coefficient(self, j):
        """Return [Y^j], zero outside 0..degree."""
        if j < 0 or j >= len(self._coefficients):
            return 0
        return self._coefficients[j]

    def is_palindromic(self):
        return self._coefficients == tuple(reversed(self._coefficients))

    def threshold_count(self, theta):
        """Return [Y^theta] + [Y^(theta - 1)], the fooling-column count of a threshold at theta."""
        return self.coefficient(theta) + self.coefficient(theta - 1)

    def __repr__(self):
        return "GenPoly(%s)" % (self._alphabet,)
