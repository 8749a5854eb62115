"""
The dependence graph of a system and the growth it suggests.

The nodes are the unknowns of the system. There is an edge from y to y' if
a term on the right hand side of y contains y'. A variable is infinite if
its series is not a polynomial, which for a system of positive terms
happens exactly when it reaches a cycle. An edge y -> y' is nonlinear if
a term containing y' has a further infinite factor.

A solution without nonlinear edges on cycles satisfies a linear system,
so its series is expected to be rational. Nonlinear cycles make the
coefficients grow at least exponentially.
"""
from __future__ import annotations
import logging
from typing import Dict, List, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, breadth_first_order
from sympy.polys.domains import QQ

from .rational_guess import guess_rational, RationalFunction
from ..eqsys.eq_system import EqSystem, SeriesSolution
from ..series.truncated_series import SeriesFlavor, constant_part, format_rational
from ..opgen_exceptions import InsufficientOrderError, SeriesDomainError

logger = logging.getLogger(__name__)

RATIONAL_EXPECTED = "rational expected"
EXPONENTIAL_EXPECTED = "exponential-or-faster expected"

class DependenceGraph():
    """
    A directed graph on the unknowns of a system.

    Attributes:
        nodes (List[str]): The unknowns.
        edges (Dict[Tuple[str, str], bool]): Every edge with a flag that is
            True if the edge is linear.
        infinite (Dict[str, bool]): Whether a node reaches a cycle.
        components (Dict[str, int]): The strongly connected component of
            every node.
    """

    def __init__(self, nodes: List[str], edges: Dict[Tuple[str, str], bool],
                 infinite: Dict[str, bool], components: Dict[str, int]):
        self.nodes = nodes
        self.edges = edges
        self.infinite = infinite
        self.components = components

    def successors(self, node: str) -> List[str]:
        return [target for source, target in self.edges if source == node]

    def is_linear(self, source: str, target: str) -> bool:
        return self.edges[(source, target)]

    def nonlinear_cycle_edges(self) -> List[Tuple[str, str]]:
        """
        The nonlinear edges lying on a cycle, i.e. inside a strongly
        connected component.
        """
        return [edge for edge, linear in self.edges.items()
                if not linear and self.components[edge[0]] == self.components[edge[1]]]

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes),
                "edges": [{"source": source, "target": target, "linear": linear}
                          for (source, target), linear in self.edges.items()],
                "infinite": [node for node in self.nodes if self.infinite[node]]}

def _adjacency(nodes: List[str], edges) -> csr_matrix:
    index = {node: i for i, node in enumerate(nodes)}
    rows = [index[source] for source, _ in edges]
    columns = [index[target] for _, target in edges]
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, columns)), shape=(len(nodes), len(nodes)))

def _infinite_nodes(nodes: List[str], edges, labels: np.ndarray) -> Dict[str, bool]:
    """
    Finds the nodes that reach a cycle.
    """
    index = {node: i for i, node in enumerate(nodes)}
    sizes = np.bincount(labels, minlength=1) if len(nodes) else np.zeros(0, dtype=int)
    on_cycle = set()
    for source, target in edges:
        if source == target:
            on_cycle.add(index[source])
    on_cycle.update(i for i in range(len(nodes)) if sizes[labels[i]] > 1)
    reaching = set()
    if on_cycle:
        reverse = _adjacency(nodes, [(target, source) for source, target in edges])
        for start in on_cycle:
            if start in reaching:
                continue
            found = breadth_first_order(reverse, start, directed=True,
                                        return_predecessors=False)
            reaching.update(int(i) for i in found)
    return {node: index[node] in reaching for node in nodes}

def dependence_graph(s: EqSystem) -> DependenceGraph:
    """
    Builds the dependence graph of a system. The ground variable is not a
    node, it is a finite series.
    """
    nodes = s.unknowns
    occurrences: Dict[Tuple[str, str], List[Tuple[str, ...]]] = {}
    for source, terms in s.equations.items():
        for term in terms:
            for position, factor in enumerate(term.factors):
                if factor == s.ground_variable:
                    continue
                others = term.factors[:position] + term.factors[position + 1:]
                occurrences.setdefault((source, factor), []).append(others)
    if nodes:
        _, labels = connected_components(_adjacency(nodes, occurrences),
                                         directed=True, connection="strong")
    else:
        labels = np.zeros(0, dtype=int)
    infinite = _infinite_nodes(nodes, occurrences, labels)
    edges = {}
    for edge, all_others in occurrences.items():
        edges[edge] = not any(infinite.get(other, False)
                              for others in all_others for other in others)
    components = {node: int(labels[i]) for i, node in enumerate(nodes)}
    logger.debug(f"Dependence graph with {len(nodes)} nodes and {len(edges)} edges.")
    return DependenceGraph(nodes, edges, infinite, components)

class GrowthReport():
    """
    An advisory comparison of the structure of a system with the growth of
    its solution.

    Attributes:
        nonlinear_cycle_edges (List[Tuple[str, str]]): Nonlinear edges on
            cycles.
        expectation (str): "rational expected" or
            "exponential-or-faster expected".
        ratios (List[str]): The quotients a(n+1)/a(n) of the last arities,
            where a(n) is dim P(n), or dim P(n)/n! for exponential series.
        trend (str): "increasing" if these quotients grow by steps that do
            not shrink, "bounded" otherwise.
        rational (RationalFunction): A rational function found for the
            total series, if any.
        warning (str): Set if the structure and the series disagree.
    """

    def __init__(self,
                 nonlinear_cycle_edges: List[Tuple[str, str]],
                 expectation: str,
                 ratios: List[str],
                 trend: str,
                 rational: Union[RationalFunction, None] = None,
                 warning: Union[str, None] = None):
        self.nonlinear_cycle_edges = nonlinear_cycle_edges
        self.expectation = expectation
        self.ratios = ratios
        self.trend = trend
        self.rational = rational
        self.warning = warning

    def to_dict(self) -> dict:
        return {"nonlinear_cycle_edges": [list(edge) for edge in self.nonlinear_cycle_edges],
                "expectation": self.expectation,
                "ratios": list(self.ratios),
                "trend": self.trend,
                "rational": None if self.rational is None else self.rational.to_dict(),
                "warning": self.warning}

    def __str__(self) -> str:
        lines = [self.expectation,
                 f"ratio trend: {self.trend} ({', '.join(self.ratios)})"]
        if self.rational is not None:
            lines.append(f"rational form: {self.rational}")
        if self.warning is not None:
            lines.append(f"warning: {self.warning}")
        return "\n".join(lines)

def _growth_values(solution: SeriesSolution) -> List:
    total = solution.total
    if total.flavor is not SeriesFlavor.EXPONENTIAL:
        return solution.dims()
    if total.is_weighted():
        total = total.specialize_t(1)
    # dim P(n)/n!
    return [constant_part(total[n]) for n in range(1, total.order + 1)]

def _ratios(values: List, count: int = 4) -> List:
    values = [QQ.convert(value) for value in values]
    ratios = [b / a for a, b in zip(values, values[1:]) if a != 0]
    return ratios[-count:]

def _is_increasing(ratios: List) -> bool:
    steps = [b - a for a, b in zip(ratios, ratios[1:])]
    return (len(steps) > 0 and all(step > 0 for step in steps)
            and all(a <= b for a, b in zip(steps, steps[1:])))

def classify_growth(g: DependenceGraph, solution: SeriesSolution) -> GrowthReport:
    """
    Compares the dependence graph with the total series of a solution.

    Exponential series are normalized by n!, so the ratio trend tells
    factorial growth of dim P(n)/n! apart from at most exponential growth.

    If a nonlinear cycle exists but a rational function fits the total,
    the report carries a warning, since this cannot happen for a correct
    system.
    """
    cycle_edges = g.nonlinear_cycle_edges()
    expectation = EXPONENTIAL_EXPECTED if cycle_edges else RATIONAL_EXPECTED
    try:
        values = _growth_values(solution)
    except SeriesDomainError:
        values = []
    ratios = _ratios(values)
    trend = "increasing" if _is_increasing(ratios) else "bounded"
    try:
        rational = guess_rational(solution.total)
    except InsufficientOrderError:
        rational = None
    warning = None
    if cycle_edges and rational is not None:
        warning = ("The system has nonlinear cycles, but its total series fits"
                   f" the rational function {rational}.")
        logger.warning(warning)
    return GrowthReport(cycle_edges, expectation,
                        [format_rational(ratio) for ratio in ratios],
                        trend, rational=rational, warning=warning)
