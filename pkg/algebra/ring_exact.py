# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Exact arithmetic in Z[ω, 1/√2] with ω = e^{iπ/4}.

A scalar is stored as ``(a + b·ω + c·ω² + d·ω³) / √2^k`` with integer
coefficients and k ≥ 0, always in canonical form: k is as small as possible
and zero is ``(0, 0, 0, 0) / √2^0``. Two scalars are equal iff their
canonical tuples are equal.

The coefficient helpers (``normalize_coeffs``, ``mul_coeffs``, ...) are
shared with the dense matrix layer, which applies the same maps plane-wise.
"""
from __future__ import annotations

from typing import Callable, Dict, Tuple, Union

Coeffs = Tuple[int, int, int, int]


def mul_sqrt2_coeffs(x: Coeffs) -> Coeffs:
    """Multiply coefficients by √2 = ω - ω³."""
    a, b, c, d = x
    return (b - d, a + c, b + d, c - a)


def divisible_by_sqrt2(x: Coeffs) -> bool:
    a, b, c, d = x
    return (a - c) % 2 == 0 and (b - d) % 2 == 0


def div_sqrt2_coeffs(x: Coeffs) -> Coeffs:
    a, b, c, d = x
    return ((b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2)


def normalize_coeffs(x: Coeffs, k: int) -> Tuple[Coeffs, int]:
    """Reduce ``x / √2^k`` to its canonical representative."""
    if not any(x):
        return (0, 0, 0, 0), 0
    while k > 0 and divisible_by_sqrt2(x):
        x = div_sqrt2_coeffs(x)
        k -= 1
    return x, k


def lift_coeffs(x: Coeffs, k: int, target: int) -> Coeffs:
    """Rewrite ``x / √2^k`` over the larger denominator √2^target."""
    steps = target - k
    if steps < 0:
        raise ValueError(f"cannot lift from k={k} down to k={target}")
    factor = 2 ** (steps // 2)
    x = tuple(v * factor for v in x)
    if steps % 2:
        x = mul_sqrt2_coeffs(x)
    return x


def mul_coeffs(x: Coeffs, y: Coeffs) -> Coeffs:
    """Multiply numerators using ω⁴ = -1."""
    out = [0, 0, 0, 0]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            m = i + j
            if m < 4:
                out[m] += xi * yj
            else:
                out[m - 4] -= xi * yj
    return tuple(out)


def omega_power_coeffs(j: int) -> Coeffs:
    j %= 8
    out = [0, 0, 0, 0]
    out[j % 4] = 1 if j < 4 else -1
    return tuple(out)


class RingScalar:
    """Immutable element of Z[ω, 1/√2]."""

    __slots__ = ("_coeffs", "_k")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, k: int = 0) -> None:
        if k < 0:
            raise ValueError("denominator exponent k must be non-negative")
        coeffs, k = normalize_coeffs((int(a), int(b), int(c), int(d)), int(k))
        self._coeffs: Coeffs = coeffs
        self._k: int = k

    @classmethod
    def from_int(cls, x: int) -> RingScalar:
        return cls(x, 0, 0, 0, 0)

    @classmethod
    def from_coeffs(cls, coeffs: Coeffs, k: int = 0) -> RingScalar:
        return cls(*coeffs, k=k)

    @classmethod
    def omega(cls, j: int = 1) -> RingScalar:
        """ω^j."""
        return cls.from_coeffs(omega_power_coeffs(j))

    @classmethod
    def coerce(cls, x: Union[int, RingScalar]) -> RingScalar:
        if isinstance(x, RingScalar):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        raise TypeError(f"cannot interpret {x!r} as a ring element")

    @property
    def coeffs(self) -> Coeffs:
        return self._coeffs

    @property
    def k(self) -> int:
        return self._k

    @property
    def a(self) -> int:
        return self._coeffs[0]

    @property
    def b(self) -> int:
        return self._coeffs[1]

    @property
    def c(self) -> int:
        return self._coeffs[2]

    @property
    def d(self) -> int:
        return self._coeffs[3]

    def numerator_at(self, k: int) -> Coeffs:
        """Numerator of this value written over √2^k (k ≥ self.k)."""
        return lift_coeffs(self._coeffs, self._k, k)

    def __repr__(self) -> str:
        a, b, c, d = self._coeffs
        return f"RingScalar({a}, {b}, {c}, {d}, k={self._k})"

    def __str__(self) -> str:
        a, b, c, d = self._coeffs
        numerator = f"{a} {b:+}w {c:+}w^2 {d:+}w^3"
        if self._k == 0:
            return f"({numerator})"
        return f"({numerator})/sqrt2^{self._k}"

    def to_json(self) -> list:
        return [*self._coeffs, self._k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingScalar.from_int(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self._coeffs == other._coeffs and self._k == other._k

    def __hash__(self) -> int:
        return hash((self._coeffs, self._k))

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __neg__(self) -> RingScalar:
        return RingScalar.from_coeffs(tuple(-v for v in self._coeffs), self._k)

    def __add__(self, other: Union[int, RingScalar]) -> RingScalar:
        other = RingScalar.coerce(other)
        k = max(self._k, other._k)
        x = self.numerator_at(k)
        y = other.numerator_at(k)
        return RingScalar.from_coeffs(tuple(p + q for p, q in zip(x, y)), k)

    def __radd__(self, other: int) -> RingScalar:
        return self + other

    def __sub__(self, other: Union[int, RingScalar]) -> RingScalar:
        return self + (-RingScalar.coerce(other))

    def __rsub__(self, other: int) -> RingScalar:
        return RingScalar.coerce(other) - self

    def __mul__(self, other: Union[int, RingScalar]) -> RingScalar:
        other = RingScalar.coerce(other)
        return RingScalar.from_coeffs(
            mul_coeffs(self._coeffs, other._coeffs), self._k + other._k
        )

    def __rmul__(self, other: int) -> RingScalar:
        return self * other

    def conj(self) -> RingScalar:
        """Complex conjugate; ω ↦ ω⁷ = -ω³."""
        a, b, c, d = self._coeffs
        return RingScalar(a, -d, -c, -b, self._k)

    def abs_squared(self) -> RingScalar:
        return self * self.conj()

    def mul_omega(self, j: int) -> RingScalar:
        return self * RingScalar.omega(j)

    def is_real(self) -> bool:
        _, b, c, d = self._coeffs
        return c == 0 and b == -d

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def omega_exponent(self):
        """Return j if this value equals ω^j, else None."""
        if self._k != 0:
            return None
        for j in range(8):
            if self._coeffs == omega_power_coeffs(j):
                return j
        return None

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        w = complex(2 ** -0.5, 2 ** -0.5)
        a, b, c, d = self._coeffs
        return (a + b * w + c * w ** 2 + d * w ** 3) / (2 ** 0.5) ** self._k


ZERO = RingScalar()
ONE = RingScalar(1)
OMEGA = RingScalar.omega(1)
I_UNIT = RingScalar.omega(2)
SQRT2 = RingScalar(0, 1, 0, -1)
INV_SQRT2 = RingScalar(1, 0, 0, 0, k=1)
HALF = RingScalar(1, 0, 0, 0, k=2)

_CONSTANTS: Dict[str, RingScalar] = {
    "zero": ZERO,
    "0": ZERO,
    "one": ONE,
    "1": ONE,
    "omega": OMEGA,
    "i": I_UNIT,
    "sqrt2": SQRT2,
    "inv_sqrt2": INV_SQRT2,
    "half": HALF,
}

_OPERATIONS: Dict[str, Callable[..., RingScalar]] = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x: -x,
    "conj": lambda x: x.conj(),
}


def ring_const(tag: str) -> RingScalar:
    """Look up a named constant: zero, one, omega, i, sqrt2, inv_sqrt2 or half."""
    try:
        return _CONSTANTS[tag]
    except KeyError:
        raise ValueError(f"unknown ring constant {tag!r}; known: {sorted(_CONSTANTS)}")


def ring_arith(op: str, x: Union[int, RingScalar], y: Union[int, RingScalar, None] = None) -> RingScalar:
    """Apply a named ring operation (add, sub, mul, neg, conj)."""
    if op not in _OPERATIONS:
        raise ValueError(f"unknown ring operation {op!r}")
    x = RingScalar.coerce(x)
    if op in ("neg", "conj"):
        return _OPERATIONS[op](x)
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    return _OPERATIONS[op](x, RingScalar.coerce(y))
