"""
The graph Gamma(Sym(m), {e, t}) on the elements of Sym(m).

Vertices are the permutations; {x y^-1, x t y^-1} is an edge for every pair
(x, y). A function f on Sym(m) annihilates F[Sym(m)/<t>] exactly when
f(a) + f(b) = 0 along every edge, so the annihilator has one dimension per
component in characteristic 2 and one per bipartite component otherwise.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

from centraliser.services import annihilator, dc_check, per_field
from hecke.permutations import all_perms
from heckecentral.exceptions import NotAnInvolution
from permmodules.gsets import coset_space_module

logger = logging.getLogger(__name__)


class GammaGraph:
    """
    Undirected simple graph on Sym(m) for an involution t.

    Attributes:
        vertices: all permutations of degree m in canonical order
        adjacency: vertex -> set of neighbours
    """

    def __init__(self, m, t):
        if t.n != m or t.is_identity() or not t.is_involution():
            raise NotAnInvolution(f"{t} is not an involution of Sym({m})")
        self.m = m
        self.t = t
        self.vertices = all_perms(m)
        self.adjacency = {v: set() for v in self.vertices}
        conjugates = {x * t * x.inverse for x in self.vertices}
        for h in self.vertices:
            for c in conjugates:
                other = h * c
                if other != h:
                    self.adjacency[h].add(other)
                    self.adjacency[other].add(h)
        self._colour = {}
        self._parent = {}
        self.components = self._search()

    @property
    def edge_count(self):
        return sum(len(n) for n in self.adjacency.values()) // 2

    def _search(self):
        """Breadth-first 2-colouring; each component records an odd cycle if it has one."""
        components = []
        for root in self.vertices:
            if root in self._colour:
                continue
            self._colour[root] = 0
            self._parent[root] = None
            members, odd = [root], None
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in sorted(self.adjacency[u], key=lambda p: p.sort_key()):
                    if v not in self._colour:
                        self._colour[v] = 1 - self._colour[u]
                        self._parent[v] = u
                        members.append(v)
                        queue.append(v)
                    elif odd is None and self._colour[v] == self._colour[u]:
                        odd = self._cycle_through(u, v)
            components.append(Component(members, odd))
        return components

    def _path_to_root(self, v):
        path = [v]
        while self._parent[path[-1]] is not None:
            path.append(self._parent[path[-1]])
        return path

    def _cycle_through(self, u, v):
        """Odd cycle closed by the edge {u, v} between two vertices of one colour."""
        up, vp = self._path_to_root(u), self._path_to_root(v)
        common = set(up) & set(vp)
        top_u = next(k for k, x in enumerate(up) if x in common)
        top_v = vp.index(up[top_u])
        return up[:top_u + 1] + list(reversed(vp[:top_v]))

    @property
    def bipartite_count(self):
        return sum(1 for c in self.components if c.odd_cycle is None)

    def annihilator_dimension(self, characteristic):
        if characteristic == 2:
            return len(self.components)
        return self.bipartite_count


@dataclass
class Component:
    members: list
    odd_cycle: list = None

    def __len__(self):
        return len(self.members)


@dataclass
class GammaFieldCheck:
    domain: dict
    graph_dimension: int
    annihilator_dimension: int
    dc_holds: bool = None

    @property
    def agrees(self):
        return self.graph_dimension == self.annihilator_dimension


@dataclass
class GammaReport:
    m: int
    t: list
    vertices: int
    edges: int
    components: int
    bipartite_components: int
    odd_cycle: list = None
    fields: list = field(default_factory=list)

    @property
    def holds(self):
        return all(f.agrees for f in self.fields)


def gamma_graph_analysis(m, t, fields, with_dc=False):
    """
    Components of Gamma(Sym(m), {e, t}) against the annihilator of F[Sym(m)/<t>].

    Args:
        m: degree
        t: Perm of order 2
        fields: list of ScalarDomain
        with_dc: also run the double centraliser check on each coset module
    """
    graph = GammaGraph(m, t)
    odd = next((c.odd_cycle for c in graph.components if c.odd_cycle), None)
    report = GammaReport(
        m=m,
        t=t.as_list(),
        vertices=len(graph.vertices),
        edges=graph.edge_count,
        components=len(graph.components),
        bipartite_components=graph.bipartite_count,
        odd_cycle=[w.as_list() for w in odd] if odd else None,
    )

    def check(domain):
        module = coset_space_module(m, [t], domain)
        result = GammaFieldCheck(
            domain=domain.descriptor(),
            graph_dimension=graph.annihilator_dimension(domain.characteristic),
            annihilator_dimension=annihilator(module).dimension,
        )
        if with_dc:
            result.dc_holds = dc_check(module).dc_holds
        return result

    report.fields = per_field(check, fields)
    for result in report.fields:
        if not result.agrees:
            logger.error(
                f"Gamma({m}, {t}) over {result.domain['label']}: graph gives "
                f"{result.graph_dimension}, annihilator {result.annihilator_dimension}"
            )
    logger.info(f"Gamma({m}, {t}): {report.components} components, {report.bipartite_components} bipartite")
    return report
