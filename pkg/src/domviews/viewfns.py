"""Integer view functions and their (partial or set-valued) inverses."""

from __future__ import annotations

import enum
from typing import Callable, Iterable, Optional


class Monotonicity(enum.Enum):
    MONOTONE = 1
    ANTI_MONOTONE = -1
    NEITHER = 0


class InjectiveFn:
    """An injective integer function with a partial inverse.

    ``inverse`` returns ``None`` where the function has no preimage.
    ``ceil_inverse(v)`` and ``floor_inverse(v)`` give the underlying bound that
    realises ``view >= v`` and ``view <= v`` respectively: for a monotone
    function they are lower/upper bounds on the underlying value, for an
    anti-monotone one they are upper/lower bounds.
    """

    monotonicity = Monotonicity.NEITHER

    def forward(self, v: int) -> int:
        raise NotImplementedError

    def inverse(self, w: int) -> Optional[int]:
        raise NotImplementedError

    def ceil_inverse(self, v: int) -> int:
        raise NotImplementedError

    def floor_inverse(self, v: int) -> int:
        raise NotImplementedError


class Shift(InjectiveFn):
    monotonicity = Monotonicity.MONOTONE

    def __init__(self, k: int) -> None:
        self.k = k

    def forward(self, v: int) -> int:
        return v + self.k

    def inverse(self, w: int) -> int:
        return w - self.k

    def ceil_inverse(self, v: int) -> int:
        return v - self.k

    floor_inverse = ceil_inverse

    def __repr__(self) -> str:
        return f"Shift({self.k})"


class Affine(InjectiveFn):
    """``v -> a*v + b`` with ``a != 0``."""

    def __init__(self, a: int, b: int) -> None:
        if a == 0:
            raise ValueError("affine view needs a non-zero coefficient (a=0 is not injective)")
        self.a = a
        self.b = b
        self.monotonicity = Monotonicity.MONOTONE if a > 0 else Monotonicity.ANTI_MONOTONE

    def forward(self, v: int) -> int:
        return self.a * v + self.b

    def inverse(self, w: int) -> Optional[int]:
        q, r = divmod(w - self.b, self.a)
        return q if r == 0 else None

    def ceil_inverse(self, v: int) -> int:
        # a > 0: least w with a*w+b >= v; a < 0: greatest such w
        if self.a > 0:
            return -((self.b - v) // self.a)
        return (v - self.b) // self.a

    def floor_inverse(self, v: int) -> int:
        if self.a > 0:
            return (v - self.b) // self.a
        return -((self.b - v) // self.a)

    def __repr__(self) -> str:
        return f"Affine({self.a}, {self.b})"


def negation() -> Affine:
    """Boolean negation ``1 - v`` as an affine function."""
    return Affine(-1, 1)


def compose(outer: Callable[[int], int], inner: Callable[[int], int]) -> Callable[[int], int]:
    return lambda v: outer(inner(v))


def identity(v: int) -> int:
    return v


class NonInjectiveFn:
    """A total integer function whose inverse is set-valued over a universe."""

    def __init__(self, forward: Callable[[int], int], name: str = "fn") -> None:
        self._forward = forward
        self.name = name

    def forward(self, v: int) -> int:
        return self._forward(v)

    def inverse_set(self, w: int, universe: Iterable[int]) -> Optional[list[int]]:
        pre = [v for v in universe if self._forward(v) == w]
        return pre or None

    def __repr__(self) -> str:
        return f"NonInjectiveFn({self.name})"


class Modulo(NonInjectiveFn):
    """``v -> v mod k`` with floor residues in ``[0, k)``."""

    def __init__(self, k: int) -> None:
        if k <= 0:
            raise ValueError(f"modulus must be positive, got {k}")
        self.k = k
        super().__init__(lambda v: v % k, f"mod {k}")


class Equals(NonInjectiveFn):
    """``v -> 1 if v == i else 0``; the function behind a literal view."""

    def __init__(self, i: int) -> None:
        self.i = i
        super().__init__(lambda v: 1 if v == i else 0, f"== {i}")
