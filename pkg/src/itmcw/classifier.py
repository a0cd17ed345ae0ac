"""The main dichotomy as a decision procedure: the class of graphs excluding
H as an induced topological minor has bounded clique-width exactly when H is
an induced subgraph of the P4, the paw, or the diamond.

Bounded verdicts carry the constructive route and its width bound; unbounded
verdicts carry the argument that applies and, where one exists, a concrete
witness family (walls, or line graphs of walls) that verify_witness can check
member by member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, canonical_form, max_degree, is_isomorphic
from .generators import all_graphs, named
from .containment import contains_induced, contains_itm

__all__ = ["Verdict", "classify", "verify_witness", "classify_all", "BOUND_FOR_ROUTE"]

BOUND_FOR_ROUTE = {"p4-route": 2, "paw-route": 6, "diamond-route": 6}

CLASSIFY_ALL_MAX = 5


@dataclass(frozen=True)
class Verdict:
    bounded: bool
    route: Optional[str]  # p4-route | paw-route | diamond-route
    bound: Optional[int]
    witness_family: Optional[str]  # walls | line-graphs-of-walls
    justification: str


def _is_induced_subgraph_of(h: Graph, host: Graph) -> bool:
    return h.n <= host.n and contains_induced(host, h) is not None


def classify(h: Graph) -> Verdict:
    """Classify the class of h-induced-topological-minor-free graphs."""
    if h.n == 0:
        # vacuous by convention: nothing is excluded
        return Verdict(True, "p4-route", 0, None, "theorem-list-membership")
    for name, route in (("P4", "p4-route"), ("paw", "paw-route"), ("diamond", "diamond-route")):
        if _is_induced_subgraph_of(h, named(name)):
            return Verdict(
                True, route, BOUND_FOR_ROUTE[route], None, "theorem-list-membership"
            )
    if max_degree(h) >= 4:
        return Verdict(False, None, None, "walls", "degree-argument")
    if is_isomorphic(h, named("K4")):
        return Verdict(False, None, None, "line-graphs-of-walls", "k4-argument")
    return Verdict(False, None, None, None, "induced-minor-argument")


def verify_witness(h: Graph, member: Graph) -> bool:
    """Check a claimed witness-family member: it must not contain h as an
    induced topological minor."""
    return contains_itm(member, h) is None


def classify_all(n_max: int) -> list[tuple[Graph, Verdict]]:
    """One (graph, verdict) row per isomorphism class of graphs on at most
    n_max vertices, deduplicated by canonical form and listed in canonical
    order."""
    if not 0 <= n_max <= CLASSIFY_ALL_MAX:
        raise ValueError(f"classify_all budget is n_max <= {CLASSIFY_ALL_MAX}")
    rows: list[tuple[Graph, Verdict]] = []
    for n in range(n_max + 1):
        reps: dict[tuple, Graph] = {}
        for g in all_graphs(n):
            cert, _ = canonical_form(g)
            if cert not in reps:
                reps[cert] = g
        for cert in sorted(reps):
            g = reps[cert]
            rows.append((g, classify(g)))
    return rows
