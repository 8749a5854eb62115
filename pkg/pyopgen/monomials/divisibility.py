"""
Divisibility of tree monomials, canonical realizations and left common
multiples.
"""
from __future__ import annotations
from typing import List, Sequence, Tuple, Union

from .generator import OperadKind
from .tree_monomial import TreeMonomial
from ..opgen_exceptions import InvalidLabelingError, KindMismatchError

def _check_same_kind(w: TreeMonomial, v: TreeMonomial):
    if w.kind is not v.kind:
        errstr = (f"Cannot compare a {w.kind.value} monomial with a "
                  f"{v.kind.value} monomial!")
        raise KindMismatchError(errstr)

def _match_at_root(w: TreeMonomial,
                   v: TreeMonomial,
                   hanging: List[Tuple[Union[int, None], Union[int, None]]]) -> bool:
    """
    Tries to embed `w` into `v` such that the roots coincide.

    For every leaf of `w` the pair (label of the leaf, smallest label of
    the subtree of `v` hanging at that leaf) is appended to `hanging`.
    """
    if w.is_leaf():
        hanging.append((w.label, v.min_leaf))
        return True
    if v.is_leaf() or w.generator != v.generator:
        return False
    for w_child, v_child in zip(w.children, v.children):
        if not _match_at_root(w_child, v_child, hanging):
            return False
    return True

def _minima_compatible(hanging: List[Tuple[Union[int, None], Union[int, None]]]) -> bool:
    """
    Whether the minima hanging at the leaves of a divisor are ordered like
    the labels of these leaves.

    If either side carries placeholders there is no order to compare.
    """
    for label, minimum in hanging:
        if label is None or minimum is None:
            return True
    ordered = sorted(hanging)
    return all(first[1] < second[1] for first, second in zip(ordered, ordered[1:]))

def rank_pattern(values: Sequence[int]) -> Tuple[int, ...]:
    """
    The order pattern of a sequence of distinct integers.

    Example:
        rank_pattern([7, 2, 9]) == (2, 1, 3)
    """
    ranking = {value: rank + 1 for rank, value in enumerate(sorted(values))}
    return tuple(ranking[value] for value in values)

def left_divides(w: TreeMonomial, v: TreeMonomial) -> bool:
    """
    Whether `w` is a left divisor of `v`.

    That is, `v` contains a planar subtree isomorphic to `w` that has the
    same root as `v`. For shuffle monomials the minima of the leaf sets
    hanging at the inputs of the subtree have to be ordered like the leaf
    labels of `w`.

    Raises:
        KindMismatchError: If the monomials are of different kinds.
    """
    _check_same_kind(w, v)
    if w.arity > v.arity:
        return False
    hanging = []
    return _match_at_root(w, v, hanging) and _minima_compatible(hanging)

def divides(w: TreeMonomial, v: TreeMonomial) -> bool:
    """
    Whether `w` divides `v`, i.e. `w` is a left divisor of some subtree
    of `v`.

    Raises:
        KindMismatchError: If the monomials are of different kinds.
    """
    _check_same_kind(w, v)
    if w.is_leaf():
        return True
    if w.arity > v.arity or w.nvertices > v.nvertices:
        return False
    for subtree in v.subtrees():
        if subtree.is_leaf() or subtree.generator != w.generator:
            continue
        if subtree.arity < w.arity:
            continue
        hanging = []
        if _match_at_root(w, subtree, hanging) and _minima_compatible(hanging):
            return True
    return False

def is_valid_shuffle(m: TreeMonomial) -> bool:
    """
    Whether `m` is a shuffle monomial in canonical realization.

    The leaf labels have to be exactly {1, ..., n} and at every vertex the
    minimal labels of the children have to increase from left to right.
    """
    labels = m.leaf_labels()
    if None in labels:
        return False
    if sorted(labels) != list(range(1, len(labels) + 1)):
        return False
    return _minima_increase(m)

def _minima_increase(m: TreeMonomial) -> bool:
    if m.is_leaf():
        return True
    minima = [child.min_leaf for child in m.children]
    if any(first >= second for first, second in zip(minima, minima[1:])):
        return False
    return all(_minima_increase(child) for child in m.children)

def canonical_realization(tree: TreeMonomial) -> TreeMonomial:
    """
    Finds the canonical planar realization of a labelled tree.

    The children of every vertex are reordered such that their minimal leaf
    labels increase. The order of the children in the input is irrelevant,
    so any planar representative of a non-planar tree may be passed.

    Args:
        tree (TreeMonomial): A tree whose leaves are labelled by exactly
            {1, ..., n}.

    Returns:
        TreeMonomial: The shuffle monomial representing the tree.

    Raises:
        InvalidLabelingError: If a label is missing, repeated or absent.
    """
    labels = tree.leaf_labels()
    if None in labels:
        errstr = f"The tree {tree.key} has unlabelled leaves!"
        raise InvalidLabelingError(errstr)
    expected = list(range(1, len(labels) + 1))
    if sorted(labels) != expected:
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        missing = sorted(set(expected) - set(labels))
        errstr = (f"The leaves of {tree.key} are not labelled by 1..{len(labels)}"
                  f" (duplicates {duplicates}, missing {missing})!")
        raise InvalidLabelingError(errstr)
    return _sort_by_minima(tree.with_kind(OperadKind.SHUFFLE))

def _sort_by_minima(tree: TreeMonomial) -> TreeMonomial:
    if tree.is_leaf():
        return tree
    children = sorted((_sort_by_minima(child) for child in tree.children),
                      key=lambda child: child.min_leaf)
    return TreeMonomial(tree.generator, children, kind=tree.kind)

def _overlay(first: TreeMonomial, second: TreeMonomial) -> Union[TreeMonomial, None]:
    if first.is_leaf():
        return second
    if second.is_leaf():
        return first
    if first.generator != second.generator:
        return None
    children = []
    for child_a, child_b in zip(first.children, second.children):
        child = _overlay(child_a, child_b)
        if child is None:
            return None
        children.append(child)
    return TreeMonomial(first.generator, children, kind=first.kind)

def left_common_multiple(ms: Sequence[TreeMonomial]) -> Union[TreeMonomial, None]:
    """
    The smallest monomial that every monomial in `ms` left-divides.

    All trees are laid over each other at their common root. Wherever one
    tree has a leaf the other tree continues. If two trees ask for
    different generators at the same position there is no common left
    multiple and None is returned, which models the zero monomial.

    Args:
        ms (Sequence[TreeMonomial]): Non-symmetric monomials.

    Returns:
        Union[TreeMonomial, None]: The left common multiple or None.
    """
    if len(ms) == 0:
        errstr = "The left common multiple of no monomials is not defined!"
        raise ValueError(errstr)
    for monomial in ms:
        if any(label is not None for label in monomial.leaf_labels()):
            errstr = "Left common multiples are only defined for unlabelled monomials!"
            raise KindMismatchError(errstr)
    result = ms[0]
    for monomial in ms[1:]:
        _check_same_kind(result, monomial)
        result = _overlay(result, monomial)
        if result is None:
            return None
    return result

def hanging_minima(w: TreeMonomial, v: TreeMonomial) -> Union[List[Union[int, None]], None]:
    """
    Embeds the shape of `w` at the root of `v` and returns, for every leaf
    of `w` from left to right, the smallest label of the subtree of `v`
    hanging at that leaf. Labels of `w` are ignored.

    Returns None if there is no such embedding.
    """
    hanging = []
    if not _match_at_root(w, v, hanging):
        return None
    return [minimum for _, minimum in hanging]

class RootDivisorIndex():
    """
    Relations grouped for fast left divisibility tests.

    Relations are grouped by root generator and by planar shape. A shuffle
    relation with a given shape is described by the order pattern of its
    leaf labels, so testing a monomial needs one structural match per
    shape and a set lookup.
    """

    def __init__(self, relations: Sequence[TreeMonomial]):
        self._shapes = {}
        for relation in relations:
            if relation.is_leaf():
                continue
            by_shape = self._shapes.setdefault(relation.generator.name, {})
            shape = relation.erase_labels()
            labels = relation.leaf_labels()
            pattern = None if None in labels else rank_pattern(labels)
            by_shape.setdefault(shape.key, (shape, set()))[1].add(pattern)

    def shapes(self, generator_name: str) -> List[TreeMonomial]:
        """
        The planar shapes of the relations with the given root generator.
        """
        return [shape for shape, _ in self._shapes.get(generator_name, {}).values()]

    def left_divided(self, v: TreeMonomial) -> bool:
        """
        Whether some relation is a left divisor of `v`.

        `v` may be a truncation, as long as every leaf of `v` carries the
        smallest label of the subtree it stands for.
        """
        if v.is_leaf():
            return False
        for shape, patterns in self._shapes.get(v.generator.name, {}).values():
            minima = hanging_minima(shape, v)
            if minima is None:
                continue
            if None in minima or None in patterns:
                return True
            if rank_pattern(minima) in patterns:
                return True
        return False
