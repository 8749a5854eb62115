"""
Builders of the stump systems.

For a non-symmetric presentation the series of the basis monomials with a
given stump satisfy y_i = t^a sum y_{s_1} * ... * y_{s_k}, summed over the
transitions into the stump. For a shuffle regular presentation the products
are replaced by the operator C, because the leaf labels are distributed
over the children with increasing minima. If the presentation is even
symmetric regular, all planar stumps with the same tree skeleton have the
same series and the system becomes algebraic again.
"""
from __future__ import annotations
import logging
from collections import Counter
from math import gcd
from typing import Dict, List

from .eq_system import EqSystem, SystemKind, SystemEngine, Term, Variable
from .stump_closure import StumpClosure
from .incl_excl import DEFAULT_TP_LIMIT, build_incl_excl_system_nonsym
from ..monomials.generator import OperadKind
from ..monomials.skeleton import Skeleton, SkeletonFlavor
from ..presentation.regularity import incomplete_skeleton_classes
from ..opgen_exceptions import KindMismatchError, NotRegularError
from ..util import exact_factorial

logger = logging.getLogger(__name__)

def _require_kind(p, kind: OperadKind, builder: str):
    if p.kind is not kind:
        errstr = f"The {builder} builder needs a {kind.value} presentation!"
        raise KindMismatchError(errstr)

def _require_regular(p, flavor: SkeletonFlavor):
    incomplete = incomplete_skeleton_classes(p, flavor)
    if incomplete:
        skeleton, missing = next(iter(incomplete.items()))
        name = "shuffle" if flavor is SkeletonFlavor.PLANAR else "symmetric"
        errstr = (f"The presentation is not {name} regular, the {flavor.value}"
                  f" skeleton class of {skeleton.key} misses"
                  f" {', '.join(monomial.key for monomial in missing)}!")
        raise NotRegularError(errstr, skeleton=skeleton, missing=missing)

def _system_from_closure(closure: StumpClosure, kind: SystemKind) -> EqSystem:
    names = closure.variable_names()
    variables = [Variable(name, stump_class.representative.key,
                          members=stump_class.member_keys())
                 for name, stump_class in zip(names, closure.classes)]
    equations: Dict[str, List[Term]] = {name: [] for name in names[1:]}
    for generator, combination, target in closure.transitions:
        term = Term(1, generator.weight, [names[i] for i in combination])
        equations[names[target]].append(term)
    system = EqSystem(kind, variables, equations, ground_variable=names[0])
    logger.info(f"Built a {kind.value} system with {len(system.unknowns)}"
                f" unknowns and {system.num_terms()} terms.")
    return system

def build_stump_system_nonsym(p, merge_equivalent: bool = True) -> EqSystem:
    """
    The system of algebraic equations of a non-symmetric presentation.

    Args:
        p (Presentation): A non-symmetric presentation.
        merge_equivalent (bool): Whether stumps with the same behaviour are
            merged into one variable.

    Returns:
        EqSystem: A system of kind nonsym-product whose reported total is
            the sum of all variables.
    """
    _require_kind(p, OperadKind.NONSYM, "non-symmetric stump")
    closure = StumpClosure(p, merge_equivalent=merge_equivalent)
    return _system_from_closure(closure, SystemKind.NONSYM_PRODUCT)

def build_stump_system_shuffle(p, merge_equivalent: bool = True) -> EqSystem:
    """
    The system of integral equations of a shuffle regular presentation.

    Raises:
        KindMismatchError: If `p` is not a shuffle presentation.
        NotRegularError: If some planar skeleton class of the relations is
            incomplete.
    """
    _require_kind(p, OperadKind.SHUFFLE, "shuffle stump")
    _require_regular(p, SkeletonFlavor.PLANAR)
    closure = StumpClosure(p, merge_equivalent=merge_equivalent)
    return _system_from_closure(closure, SystemKind.SHUFFLE_C)

def _merge_terms(terms: List[Term]) -> List[Term]:
    """
    Adds up equal terms, as far as the result is again a unit fraction.
    """
    counts = Counter(terms)
    merged = []
    for term, count in counts.items():
        common = gcd(count, term.divisor)
        merged.extend([Term(term.sign, term.t_exp, list(term.factors),
                            term.divisor // common)] * (count // common))
    return merged

def build_symmetric_regular_system(p) -> EqSystem:
    """
    The algebraic system of a symmetric regular presentation.

    All planar stumps with the same tree skeleton have the same series Y_T.
    Summing their equations and symmetrizing the operator C over the orders
    of the children gives m_T Y_T = sum 1/k! t^a Y_{T_1} * ... * Y_{T_k},
    where m_T is the number of planar stumps with tree skeleton T. The
    total series is the sum of m_T Y_T.

    Raises:
        KindMismatchError: If `p` is not a shuffle presentation.
        NotRegularError: If some tree skeleton class of the relations, or
            of the stumps, is incomplete.
    """
    _require_kind(p, OperadKind.SHUFFLE, "symmetric regular")
    _require_regular(p, SkeletonFlavor.TREE)
    closure = StumpClosure(p, merge_equivalent=False)
    groups: Dict[str, List[int]] = {}
    for stump_class in closure.classes:
        key = Skeleton(stump_class.representative, SkeletonFlavor.TREE).key
        groups.setdefault(key, []).append(stump_class.index)
    group_of = {}
    variables = []
    counter = 1
    for key, members in groups.items():
        skeleton = Skeleton(closure.classes[members[0]].representative, SkeletonFlavor.TREE)
        expected = len(skeleton.planar_realizations())
        if len(members) != expected:
            errstr = (f"Only {len(members)} of the {expected} planar stumps with"
                      f" tree skeleton {key} occur, the presentation is not"
                      " symmetric regular!")
            raise NotRegularError(errstr, skeleton=skeleton)
        member_keys = sorted(closure.classes[i].representative.key for i in members)
        shape = skeleton.shape
        if shape.is_leaf():
            name = "y0"
        elif all(child.is_leaf() for child in shape.children):
            name = f"y_{shape.generator.name}"
        else:
            name = f"y{counter}"
            counter += 1
        variables.append(Variable(name, member_keys[0],
                                  multiplicity=len(members),
                                  members=member_keys))
        for i in members:
            group_of[i] = (name, len(members))
    equations: Dict[str, List[Term]] = {variable.id: [] for variable in variables
                                        if variable.id != "y0"}
    for generator, combination, target in closure.transitions:
        name, multiplicity = group_of[target]
        factors = sorted(group_of[i][0] for i in combination)
        divisor = exact_factorial(generator.arity) * multiplicity
        equations[name].append(Term(1, generator.weight, factors, divisor))
    equations = {name: _merge_terms(terms) for name, terms in equations.items()}
    system = EqSystem(SystemKind.SYMMETRIC_ALGEBRAIC, variables, equations,
                      ground_variable="y0")
    logger.info(f"Built a symmetric-algebraic system with {len(system.unknowns)}"
                f" unknowns and {system.num_terms()} terms.")
    return system

def build_system(p,
                 engine: SystemEngine = SystemEngine.STUMP,
                 merge_equivalent: bool = True,
                 max_size: int = DEFAULT_TP_LIMIT) -> EqSystem:
    """
    Builds a system for `p` with the chosen construction.

    The stump construction picks the product or the C form according to
    the kind of the presentation.
    """
    engine = SystemEngine(engine)
    if engine is SystemEngine.INCL_EXCL:
        return build_incl_excl_system_nonsym(p, max_size=max_size)
    if engine is SystemEngine.SYMMETRIC:
        return build_symmetric_regular_system(p)
    if p.kind is OperadKind.SHUFFLE:
        return build_stump_system_shuffle(p, merge_equivalent=merge_equivalent)
    return build_stump_system_nonsym(p, merge_equivalent=merge_equivalent)
