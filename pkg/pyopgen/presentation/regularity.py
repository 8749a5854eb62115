"""
Expansion of skeletons and the shuffle and symmetric regularity checks.

A set of shuffle monomials is shuffle regular, if together with a monomial
it contains every shuffle monomial with the same planar skeleton. It is
symmetric regular, if it contains every shuffle monomial with the same
tree skeleton.
"""
from __future__ import annotations
from typing import Dict, List

from ..monomials.generator import OperadKind
from ..monomials.tree_monomial import TreeMonomial
from ..monomials.divisibility import divides
from ..monomials.skeleton import Skeleton, SkeletonFlavor
from ..opgen_exceptions import KindMismatchError

def expand_planar_skeleton(s: Skeleton) -> List[TreeMonomial]:
    """
    All shuffle monomials with the planar skeleton `s`, sorted by their
    encoding.
    """
    if s.flavor is not SkeletonFlavor.PLANAR:
        errstr = "Expected a planar skeleton, use expand_tree_skeleton for tree skeletons!"
        raise ValueError(errstr)
    return s.labelings()

def expand_tree_skeleton(s: Skeleton) -> List[TreeMonomial]:
    """
    All shuffle monomials whose tree skeleton is `s`, i.e. the union of
    the expansions of all planar realizations of `s`.
    """
    if s.flavor is not SkeletonFlavor.TREE:
        s = Skeleton(s.shape, SkeletonFlavor.TREE)
    return s.labelings()

def incomplete_skeleton_classes(p,
                                flavor: SkeletonFlavor = SkeletonFlavor.PLANAR
                                ) -> Dict[Skeleton, List[TreeMonomial]]:
    """
    Finds the skeleton classes that are only partially contained in the
    relations of a shuffle presentation.

    Args:
        p (Presentation): A shuffle presentation.
        flavor (SkeletonFlavor): Planar skeletons for shuffle regularity,
            tree skeletons for symmetric regularity.

    Returns:
        Dict[Skeleton, List[TreeMonomial]]: For every incomplete class the
            monomials missing from the relations, in order of first
            appearance of the class.
    """
    if p.kind is not OperadKind.SHUFFLE:
        errstr = "Regularity is only defined for shuffle presentations!"
        raise KindMismatchError(errstr)
    present = {relation.key for relation in p.relations}
    incomplete = {}
    seen = set()
    for relation in p.relations:
        skeleton = Skeleton(relation, flavor)
        if skeleton in seen:
            continue
        seen.add(skeleton)
        missing = [monomial for monomial in skeleton.labelings()
                   if monomial.key not in present]
        if missing:
            incomplete[skeleton] = missing
    return incomplete

def check_shuffle_regular(p) -> bool:
    """
    Whether the relations of `p` are a union of planar skeleton classes.
    """
    return len(incomplete_skeleton_classes(p, SkeletonFlavor.PLANAR)) == 0

def check_symmetric_regular(p) -> bool:
    """
    Whether the relations of `p` are a union of tree skeleton classes.
    """
    return len(incomplete_skeleton_classes(p, SkeletonFlavor.TREE)) == 0

def is_reduced(p) -> bool:
    """
    Whether no relation of `p` divides another one.
    """
    relations = p.relations
    for first in relations:
        for second in relations:
            if first is not second and divides(first, second):
                return False
    return True
