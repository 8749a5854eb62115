"""
The inclusion-exclusion system of a non-symmetric presentation.

For a basis monomial v let y_v count the basis monomials left-divisible by
v. Writing v = mu(v_1, ..., v_k), the basis monomials starting with v are
the compositions mu(M_{v_1}, ..., M_{v_k}) minus those left-divisible by a
relation g = mu(g_1, ..., g_k) that is compatible with v. By inclusion and
exclusion over sets S of such relations

    y_v = t^a sum_S (-1)^|S| y_{[v_1 u S_1]} * ... * y_{[v_k u S_k]},

where [v_i u S_i] is the left common multiple of v_i and the i-th subtrees
of the relations in S. A left common multiple that is divisible by a
relation counts no basis monomial, so its term vanishes. The identity
satisfies y_1 = z + sum_mu y_mu.
"""
from __future__ import annotations
import logging
from itertools import combinations
from typing import Dict, List

from .eq_system import EqSystem, SystemKind, Term, Variable
from ..monomials.generator import OperadKind
from ..monomials.tree_monomial import TreeMonomial
from ..monomials.divisibility import divides, left_common_multiple
from ..opgen_exceptions import EnumerationLimitError, KindMismatchError

logger = logging.getLogger(__name__)

DEFAULT_TP_LIMIT = 10**4

IDENTITY_VARIABLE = "y_id"

class _MonomialSet():
    """
    The growing set T(P) of monomials with a variable each.
    """

    def __init__(self, max_size: int):
        self.max_size = max_size
        self.monomials: Dict[str, TreeMonomial] = {}
        self.names: Dict[str, str] = {}
        self.queue: List[TreeMonomial] = []
        self._counter = 1

    def add(self, monomial: TreeMonomial) -> str:
        if monomial.key in self.names:
            return self.names[monomial.key]
        if len(self.monomials) >= self.max_size:
            errstr = (f"The inclusion-exclusion set grew beyond {self.max_size}"
                      " monomials!")
            raise EnumerationLimitError(errstr)
        if monomial.is_leaf():
            name = IDENTITY_VARIABLE
        elif all(child.is_leaf() for child in monomial.children):
            name = f"y_{monomial.generator.name}"
        else:
            name = f"y{self._counter}"
            self._counter += 1
        self.monomials[monomial.key] = monomial
        self.names[monomial.key] = name
        self.queue.append(monomial)
        return name

def _is_zero(monomial: TreeMonomial, relations: List[TreeMonomial]) -> bool:
    return any(divides(relation, monomial) for relation in relations)

def build_incl_excl_system_nonsym(p, max_size: int = DEFAULT_TP_LIMIT) -> EqSystem:
    """
    The inclusion-exclusion system of a non-symmetric presentation.

    The variables are the monomials of the smallest set T(P) that contains
    the identity and the generators and is closed under the left common
    multiples appearing on the right hand sides. Only the identity
    variable is reported, its series is the series of the operad.

    Args:
        p (Presentation): A non-symmetric presentation.
        max_size (int): The maximal size of T(P).

    Raises:
        KindMismatchError: If `p` is a shuffle presentation.
        EnumerationLimitError: If T(P) grows beyond `max_size`.
    """
    if p.kind is not OperadKind.NONSYM:
        errstr = "The inclusion-exclusion builder needs a non-symmetric presentation!"
        raise KindMismatchError(errstr)
    relations = p.relations
    found = _MonomialSet(max_size)
    found.add(TreeMonomial(kind=OperadKind.NONSYM))
    identity_terms = [Term(1, 0, ["y0"])]
    for generator in p.generators:
        corolla = TreeMonomial.corolla(generator, OperadKind.NONSYM)
        if _is_zero(corolla, relations):
            continue
        identity_terms.append(Term(1, 0, [found.add(corolla)]))
    equations: Dict[str, List[Term]] = {IDENTITY_VARIABLE: identity_terms}
    position = 1
    while position < len(found.queue):
        v = found.queue[position]
        position += 1
        compatible = [relation for relation in relations
                      if relation.generator == v.generator
                      and left_common_multiple([v, relation]) is not None]
        terms = []
        for size in range(len(compatible) + 1):
            for subset in combinations(compatible, size):
                if left_common_multiple([v] + list(subset)) is None:
                    continue
                components = [left_common_multiple([child] + [g.children[i] for g in subset])
                              for i, child in enumerate(v.children)]
                if any(_is_zero(component, relations) for component in components):
                    continue
                factors = [found.add(component) for component in components]
                terms.append(Term((-1)**size, v.generator.weight, factors))
        equations[found.names[v.key]] = terms
    variables = [Variable("y0", "z")]
    variables += [Variable(found.names[key], key) for key in found.monomials]
    system = EqSystem(SystemKind.NONSYM_PRODUCT, variables, equations,
                      ground_variable="y0", reported=[IDENTITY_VARIABLE])
    logger.info(f"Built an inclusion-exclusion system with |T(P)| ="
                f" {len(found.monomials)} and {system.num_terms()} terms.")
    return system
