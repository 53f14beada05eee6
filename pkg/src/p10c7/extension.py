"""Undo records that lift a coloring of a reduced graph back to its parent.

Every reduction step in the package appends one record per deleted vertex.
Replaying the records newest-first over a proper coloring of the reduced
graph yields a proper coloring of the graph the first record was taken from.
Each record stores what it needs (witness vertex, neighbor tuple) so replay
never consults the graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import ExtensionError

COLORS = (1, 2, 3)


@dataclass(frozen=True)
class ComparableDeleted:
    """``u`` was removed because ``N(u)`` lies inside ``N(witness)``."""

    vertex: int
    witness: int

    def assign(self, c: Mapping[int, int]) -> int:
        return c[self.witness]


@dataclass(frozen=True)
class D1DoubleDeleted:
    """A distance-2 vertex with a distance-3 neighbor, colored like a cycle vertex."""

    vertex: int
    sign_list: tuple[int, ...]
    cycle: tuple[int, ...]
    source: int

    def assign(self, c: Mapping[int, int]) -> int:
        return c[self.source]


@dataclass(frozen=True)
class FreeColorDeleted:
    """Vertex recolored greedily with the least color unused on ``neighbors``.

    Used for distance-3 vertices during cleaning and for isolated vertices
    removed together with a monochromatic constraint on their two sides.
    """

    vertex: int
    neighbors: tuple[int, ...]
    allowed: tuple[int, ...] = COLORS

    def assign(self, c: Mapping[int, int]) -> int:
        used = {c[w] for w in self.neighbors}
        for k in self.allowed:
            if k not in used:
                return k
        raise ExtensionError(
            f"vertex {self.vertex}: neighbors use {sorted(used)}, allowed {list(self.allowed)}"
        )


@dataclass(frozen=True)
class D2Deleted(FreeColorDeleted):
    pass


@dataclass(frozen=True)
class IsolatedMonoDeleted(FreeColorDeleted):
    groups: tuple[frozenset[int], ...] = ()


@dataclass(frozen=True)
class BipartitePartCollapsed:
    """A vertex of a collapsed bipartite component, colored like its side's survivor."""

    vertex: int
    representative: int

    def assign(self, c: Mapping[int, int]) -> int:
        return c[self.representative]


LiftStep = ComparableDeleted | D1DoubleDeleted | FreeColorDeleted | BipartitePartCollapsed


class ExtensionLog:
    """Ordered list of undo records; append-only."""

    __slots__ = ("steps",)

    def __init__(self, steps: Iterable[LiftStep] = ()) -> None:
        self.steps: list[LiftStep] = list(steps)

    def append(self, step: LiftStep) -> None:
        self.steps.append(step)

    def extend(self, steps: Iterable[LiftStep]) -> None:
        self.steps.extend(steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __repr__(self) -> str:
        return f"ExtensionLog({len(self.steps)} steps)"


def replay(steps: Iterable[LiftStep], c: Mapping[int, int]) -> dict[int, int]:
    out = dict(c)
    for step in reversed(list(steps)):
        if step.vertex in out:
            raise ExtensionError(f"vertex {step.vertex} is already colored")
        try:
            out[step.vertex] = step.assign(out)
        except KeyError as exc:
            raise ExtensionError(
                f"vertex {step.vertex}: replay needs uncolored vertex {exc.args[0]}"
            ) from None
    return out
