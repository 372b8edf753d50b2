"""The 27-graph obstruction family for sum-perfect graphs.

Members 1..13 and 26 are fixed edge lists (member 1 on 5 vertices, members
2..13 the bipartite 6-vertex graphs with a perfect matching, member 26 on 7
vertices); members 14..25 are the complements of 2..13 and member 27 is the
complement of 26. enumerate_bipartite_pm6 regenerates the 6-vertex layer
independently so a transcription slip and a generation slip would have to
coincide to go unnoticed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_key
from .graphs import Graph, complement, delete_vertex, from_edge_list, is_connected
from .invariants import (
    clique_number,
    deficit,
    is_sum_perfect_definitional,
    matching_number,
    stability_number,
)

# Vertex labels as printed: 5-cycle 0..4; bipartite members on parts
# {0,1,2} / {3,4,5}; member 26 on 0..6.
_BASE_EDGES: dict[int, tuple[int, tuple[tuple[int, int], ...]]] = {
    1: (5, ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))),
    2: (6, ((0, 3), (1, 4), (2, 5))),
    3: (6, ((0, 3), (0, 5), (1, 4), (2, 5))),
    4: (6, ((0, 3), (0, 5), (1, 4), (1, 5), (2, 5))),
    5: (6, ((0, 3), (1, 4), (1, 5), (2, 4), (2, 5))),
    6: (6, ((0, 3), (0, 5), (1, 4), (1, 5), (2, 4))),
    7: (6, ((0, 3), (0, 5), (1, 4), (1, 5), (2, 4), (2, 5))),
    8: (6, ((0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5))),
    9: (6, ((0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 5))),
    10: (6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 4), (2, 5))),
    11: (6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5))),
    12: (6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5))),
    13: (6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))),
    26: (7, ((0, 3), (0, 5), (0, 6), (1, 4), (1, 5), (2, 4), (2, 6), (4, 5), (4, 6), (5, 6))),
}

_ALIASES = {
    1: "C5",
    2: "3K2",
    3: "P4+K2",
    4: "S_{1,2,2}",
    5: "C4+K2",
    6: "P6",
    8: "C6",
    12: "K3,3-e",
    13: "K3,3",
}

# Indices of the disconnected members: 3K2, P4+K2, C4+K2, and the complement
# of K3,3 (= 2K3).
DISCONNECTED_INDICES = frozenset({2, 3, 5, 25})


@dataclass(frozen=True)
class FamilyMember:
    index: int
    name: str
    graph: Graph
    key: bytes


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple[FamilyMember, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def member(self, index: int) -> FamilyMember:
        return self.members[index - 1]

    def keys(self) -> frozenset[bytes]:
        return frozenset(m.key for m in self.members)


def _member(index: int) -> Graph:
    if index in _BASE_EDGES:
        n, edges = _BASE_EDGES[index]
        return from_edge_list(n, edges)
    if 14 <= index <= 25:
        return complement(_member(index - 12))
    if index == 27:
        return complement(_member(26))
    raise ValueError(f"no member {index}")


@lru_cache(maxsize=1)
def build_family() -> ForbiddenFamily:
    """All 27 forbidden graphs, indexed 1..27."""
    members = []
    for i in range(1, 28):
        g = _member(i)
        members.append(FamilyMember(i, _ALIASES.get(i, f"H{i}"), g, canonical_key(g)))
    return ForbiddenFamily(tuple(members))


@lru_cache(maxsize=1)
def build_conjecture_family() -> tuple[FamilyMember, ...]:
    """Members 2..25: the family minus the 5-cycle and the two 7-vertex graphs."""
    return build_family().members[1:25]


def enumerate_bipartite_pm6() -> list[Graph]:
    """All bipartite 6-vertex graphs with a perfect matching, up to isomorphism.

    Starts from the perfect matching on parts {0,1,2}/{3,4,5} and adds every
    subset of the six remaining cross edges, deduplicating by canonical key.
    Each survivor is verified bipartite with matching number 3.
    """
    base = ((0, 3), (1, 4), (2, 5))
    extra = ((0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4))
    seen: dict[bytes, Graph] = {}
    for bits in range(1 << len(extra)):
        edges = list(base)
        for i, e in enumerate(extra):
            if (bits >> i) & 1:
                edges.append(e)
        g = from_edge_list(6, edges)
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    out = [seen[k] for k in sorted(seen)]
    from .graphs import bipartition

    for g in out:
        if bipartition(g) is None or matching_number(g) != 3:
            raise AssertionError("generated a non-bipartite or non-PM graph")
    return out


@dataclass(frozen=True)
class MemberChecks:
    index: int
    name: str
    deficit_is_one: bool
    deletions_sum_perfect: bool
    alpha_omega_deletion_invariant: bool
    max_alpha_omega_le_3: bool

    @property
    def passed(self) -> bool:
        return (
            self.deficit_is_one
            and self.deletions_sum_perfect
            and self.alpha_omega_deletion_invariant
            and self.max_alpha_omega_le_3
        )


@dataclass(frozen=True)
class FamilyReport:
    member_checks: tuple[MemberChecks, ...]
    pairwise_distinct: bool
    complement_closed: bool
    minimal_as_set: bool
    disconnected_match: bool

    @property
    def passed(self) -> bool:
        return (
            all(c.passed for c in self.member_checks)
            and self.pairwise_distinct
            and self.complement_closed
            and self.minimal_as_set
            and self.disconnected_match
        )


def verify_family(family: ForbiddenFamily | None = None) -> FamilyReport:
    """Re-derive every structural claim the family is supposed to satisfy."""
    from .induced import contains_induced

    fam = family if family is not None else build_family()
    checks = []
    for m in fam:
        g = m.graph
        a, w = stability_number(g), clique_number(g)
        checks.append(
            MemberChecks(
                index=m.index,
                name=m.name,
                deficit_is_one=deficit(g) == 1,
                deletions_sum_perfect=all(
                    is_sum_perfect_definitional(delete_vertex(g, v)) for v in range(g.n)
                ),
                alpha_omega_deletion_invariant=all(
                    stability_number(delete_vertex(g, v)) == a
                    and clique_number(delete_vertex(g, v)) == w
                    for v in range(g.n)
                ),
                max_alpha_omega_le_3=max(a, w) <= 3,
            )
        )

    keys = [m.key for m in fam]
    distinct = len(set(keys)) == len(fam)
    closed = {canonical_key(complement(m.graph)) for m in fam} == set(keys)
    disconnected = {
        m.index for m in fam if not is_connected(m.graph)
    } == set(DISCONNECTED_INDICES)

    minimal = True
    for m in fam:
        for other in fam:
            if other.index == m.index or other.graph.n > m.graph.n:
                continue
            if other.graph.n == m.graph.n:
                continue  # distinct same-order members cannot nest
            if contains_induced(m.graph, other.graph) is not None:
                minimal = False

    return FamilyReport(
        member_checks=tuple(checks),
        pairwise_distinct=distinct,
        complement_closed=closed,
        minimal_as_set=minimal,
        disconnected_match=disconnected,
    )


__all__ = [
    "FamilyMember",
    "ForbiddenFamily",
    "FamilyReport",
    "MemberChecks",
    "DISCONNECTED_INDICES",
    "build_family",
    "build_conjecture_family",
    "enumerate_bipartite_pm6",
    "verify_family",
]
