"""Index sets and the Z_2 grading of gl(m|n)."""

from dataclasses import dataclass
from functools import cached_property


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    """The pair (m, n); indices run over 1..m+n and those above m are odd."""

    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise SignatureError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise SignatureError(f"gl({self.m}|{self.n}): need m >= 1 and n >= 1")

    @property
    def size(self) -> int:
        return self.m + self.n

    @cached_property
    def parities(self) -> tuple:
        # index 0 unused so that parities[a] reads naturally
        return (0,) + tuple(0 if a <= self.m else 1 for a in range(1, self.size + 1))

    def parity(self, a: int) -> int:
        self.check_index(a)
        return self.parities[a]

    def check_index(self, a: int) -> None:
        if not 1 <= a <= self.size:
            raise IndexError(f"index {a} outside 1..{self.size} for gl({self.m}|{self.n})")

    def indices(self) -> range:
        return range(1, self.size + 1)

    def __str__(self):
        return f"gl({self.m}|{self.n})"


def signatures_up_to(max_total: int):
    """All (m, n) with m, n >= 1 and m + n <= max_total, by total then m."""
    for total in range(2, max_total + 1):
        for m in range(1, total):
            yield Signature(m, total - m)
