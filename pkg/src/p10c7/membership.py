"""Membership in the class of P10-free graphs whose odd induced cycles are all C7."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bipartition, find_induced_path, iter_induced_cycles

PATH_LIMIT = 10
# An induced C_m contains an induced P_(m-1), so a P10-free graph has no
# induced cycle longer than 19.
P10_FREE_CYCLE_BOUND = 19


@dataclass(frozen=True)
class MembershipReport:
    is_member: bool
    is_bipartite: bool
    bad_path: tuple[int, ...] | None = None
    bad_cycle: tuple[int, ...] | None = None

    def describe(self) -> str:
        lines = [f"member: {'yes' if self.is_member else 'no'}",
                 f"bipartite: {'yes' if self.is_bipartite else 'no'}"]
        if self.bad_path:
            lines.append("induced P10: " + " ".join(map(str, self.bad_path)))
        if self.bad_cycle:
            lines.append(f"induced C{len(self.bad_cycle)}: " + " ".join(map(str, self.bad_cycle)))
        return "\n".join(lines)


def find_induced_odd_cycle_neq7(g: Graph, max_length: int | None = None) -> tuple[int, ...] | None:
    """Shortest induced odd cycle whose length is not 7, least in canonical order."""
    top = g.n if max_length is None else min(max_length, g.n)
    for length in range(3, top + 1, 2):
        if length == 7:
            continue
        for cyc in iter_induced_cycles(g, length):
            return cyc
    return None


def check_membership(g: Graph) -> MembershipReport:
    bipartite = bipartition(g) is not None
    path = find_induced_path(g, PATH_LIMIT)
    if bipartite:
        cycle = None
    else:
        bound = P10_FREE_CYCLE_BOUND if path is None else None
        cycle = find_induced_odd_cycle_neq7(g, bound)
    return MembershipReport(path is None and cycle is None, bipartite, path, cycle)


def is_member(g: Graph) -> bool:
    return check_membership(g).is_member
