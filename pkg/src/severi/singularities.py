"""Local invariants of A_k curve singularities and the genus ledger."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidIndex(ValueError):
    pass


class GenusUnderflow(ValueError):
    """Singularities drop more genus than the curve has."""


@dataclass(frozen=True)
class AkInvariants:
    """Numerical package of the germ y^2 = x^(k+1).

    ``delta`` uses the convention ceil(k/2), forced by delta = (milnor + branches - 1) / 2.
    ``delta_floor`` keeps the floor(k/2) value for side-by-side reporting.
    """

    k: int
    delta: int
    milnor: int
    branches: int
    t1_dim: int
    equigeneric_dim: int

    @property
    def delta_floor(self) -> int:
        return self.k // 2

    @property
    def name(self) -> str:
        return f"A{self.k}"


def ak_invariants(k: int) -> AkInvariants:
    if not isinstance(k, int) or k < 1:
        raise InvalidIndex(f"A_k index must be a positive integer, got {k!r}")
    milnor = k
    # y^2 - x^(k+1) factors into two branches iff k+1 is even
    branches = 2 if k % 2 else 1
    twice_delta = milnor + branches - 1
    assert twice_delta % 2 == 0
    delta = twice_delta // 2
    return AkInvariants(k=k, delta=delta, milnor=milnor, branches=branches,
                        t1_dim=k, equigeneric_dim=delta)


def parse_ak(token: str) -> AkInvariants:
    """Parse ``"A3"`` (or ``"a3"``, ``"3"``) into invariants."""
    t = token.strip()
    if t[:1] in ("A", "a"):
        t = t[1:]
    try:
        k = int(t)
    except ValueError:
        raise InvalidIndex(f"cannot parse singularity {token!r}") from None
    return ak_invariants(k)


@dataclass(frozen=True)
class GenusLedger:
    p_a: int
    local_deltas: tuple[int, ...]
    g: int
    delta_total: int


def genus_ledger(p_a: int, sing: Iterable[AkInvariants]) -> GenusLedger:
    deltas = tuple(s.delta for s in sing)
    total = sum(deltas)
    if total > p_a:
        raise GenusUnderflow(f"total delta {total} exceeds arithmetic genus {p_a}")
    return GenusLedger(p_a=p_a, local_deltas=deltas, g=p_a - total, delta_total=total)


def max_nodes(p_a: int, g_min: int) -> int:
    if g_min > p_a:
        raise GenusUnderflow(f"minimal genus {g_min} exceeds arithmetic genus {p_a}")
    return p_a - g_min


def nodes_after_equigeneric_smoothing(sing: Sequence[AkInvariants]) -> int:
    return sum(s.delta for s in sing)
