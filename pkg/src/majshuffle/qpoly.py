"""Exact integer polynomials in one variable q and the classical q-analogues."""

from __future__ import annotations

import functools
import itertools
import json
from typing import Callable, Iterable, Sequence


class QPolynomial:
    """Dense polynomial with integer coefficients; index d holds the q**d term.

    Instances are immutable; trailing zero coefficients are trimmed so equal
    polynomials compare equal.

    >>> str(QPolynomial((1, 2, 2, 1)))
    '1 + 2q + 2q^2 + q^3'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def shift(self, c: int) -> "QPolynomial":
        """Multiply by q**c."""
        if c < 0:
            raise ValueError("shift amount must be nonnegative")
        if not self.coeffs:
            return self
        return QPolynomial((0,) * c + self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for d, c in enumerate(other.coeffs):
            out[d] -= c
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            base = "q" if d == 1 else f"q^{d}"
            if c == 1:
                terms.append(base)
            elif c == -1:
                terms.append(f"-{base}")
            else:
                terms.append(f"{c}{base}")
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def to_json(self) -> str:
        return json.dumps({"coeffs": list(self.coeffs)})

    @classmethod
    def from_json(cls, text: str) -> "QPolynomial":
        data = json.loads(text)
        return cls(data["coeffs"])


ONE = QPolynomial((1,))
ZERO = QPolynomial()


def q_integer(n: int) -> QPolynomial:
    """1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QPolynomial((1,) * n)


def q_factorial(n: int) -> QPolynomial:
    """Product of the q-integers 1..n; degree n(n-1)/2.

    >>> str(q_factorial(3))
    '1 + 2q + 2q^2 + q^3'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


@functools.cache
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial, built from the Pascal-style recurrence.

    Symmetric in k and n-k; specialises to binomial(n, k) at q = 1.
    """
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"undefined for n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def divide_exact(num: QPolynomial, den: QPolynomial) -> QPolynomial:
    """Long division that insists on a zero remainder over the integers."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return ZERO
    rem = list(num.coeffs)
    dc = den.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    qd = len(rem) - len(dc)
    if qd < 0:
        raise ArithmeticError("inexact polynomial division")
    out = [0] * (qd + 1)
    for d in range(qd, -1, -1):
        c = rem[d + dd]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        f = c // lead
        out[d] = f
        if f:
            for t, ct in enumerate(dc):
                rem[d + t] -= f * ct
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return QPolynomial(out)


def q_binomial_by_division(n: int, k: int) -> QPolynomial:
    """Gaussian binomial as a quotient of q-factorials; cross-check route."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"undefined for n={n}, k={k}")
    return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def q_multinomial(n: int, parts: Sequence[int]) -> QPolynomial:
    """Gaussian multinomial for a composition of n, as a telescoping product."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} do not compose {n}")
    out = ONE
    total = 0
    for p in parts:
        total += p
        out = out * q_binomial(total, p)
    return out


def partition_gf(bound: int, count: int) -> QPolynomial:
    """Generating function by size over partitions with `count` parts in [0, bound].

    Enumerates the partitions outright, so it is an independent route to the
    Gaussian binomial of bound+count over count.
    """
    if bound < 0 or count < 0:
        raise ValueError("bound and count must be nonnegative")
    coeffs = [0] * (bound * count + 1)
    for lam in itertools.combinations_with_replacement(range(bound + 1), count):
        coeffs[sum(lam)] += 1
    return QPolynomial(coeffs)


def _gf(words: Iterable[Sequence[int]], stat: Callable[[Sequence[int]], int]) -> QPolynomial:
    coeffs: list[int] = []
    for w in words:
        s = stat(w)
        if s >= len(coeffs):
            coeffs.extend([0] * (s + 1 - len(coeffs)))
        coeffs[s] += 1
    return QPolynomial(coeffs)


def maj_generating_function(words: Iterable[Sequence[int]]) -> QPolynomial:
    """Sum of q**maj(w) over a stream of words."""
    from .words import maj

    return _gf(words, maj)


def inv_generating_function(words: Iterable[Sequence[int]]) -> QPolynomial:
    """Sum of q**inv(w) over a stream of words."""
    from .words import inv

    return _gf(words, inv)
