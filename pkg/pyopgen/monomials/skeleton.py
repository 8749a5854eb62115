"""
Skeletons and stumps of tree monomials.

The planar skeleton of a shuffle monomial forgets the leaf labels but keeps
the order of the children. The tree skeleton additionally forgets the
planar order, so that all planar realizations of the same abstract tree
have the same tree skeleton. Stumps are truncations of monomials to the
levels that matter for divisibility by a fixed set of relations.
"""
from __future__ import annotations
from enum import Enum
from itertools import permutations, product
from typing import Iterator, List, Union

from .generator import OperadKind
from .tree_monomial import TreeMonomial
from ..opgen_exceptions import KindMismatchError
from ..util import shuffle_distributions

class SkeletonFlavor(Enum):
    """
    PLANAR: The order of the children is significant.
    TREE: Children are kept in a canonical sorted order, so equality does
        not depend on the planar order.
    """
    PLANAR = "planar"
    TREE = "tree"

def _sorted_shape(shape: TreeMonomial) -> TreeMonomial:
    if shape.is_leaf():
        return shape
    children = sorted((_sorted_shape(child) for child in shape.children),
                      key=lambda child: child.key)
    return TreeMonomial(shape.generator, children, kind=shape.kind)

def _planar_realizations(shape: TreeMonomial) -> List[TreeMonomial]:
    if shape.is_leaf():
        return [shape]
    options = [_planar_realizations(child) for child in shape.children]
    found = {}
    for order in set(permutations(range(len(options)))):
        for children in product(*[options[i] for i in order]):
            realization = TreeMonomial(shape.generator, children, kind=shape.kind)
            found[realization.key] = realization
    return [found[key] for key in sorted(found)]

def shuffle_labelings(shape: TreeMonomial) -> Iterator[TreeMonomial]:
    """
    All valid shuffle labelings of a planar shape.

    The leaves of the shape are labelled by {1, ..., n} such that at every
    vertex the minima of the children increase.
    """
    yield from _labelings(shape, tuple(range(1, shape.arity + 1)))

def _labelings(shape: TreeMonomial, labels: tuple) -> Iterator[TreeMonomial]:
    if shape.is_leaf():
        yield TreeMonomial(label=labels[0], kind=OperadKind.SHUFFLE)
        return
    sizes = [child.arity for child in shape.children]
    for blocks in shuffle_distributions(labels, sizes):
        options = [list(_labelings(child, block))
                   for child, block in zip(shape.children, blocks)]
        for children in product(*options):
            yield TreeMonomial(shape.generator, children, kind=OperadKind.SHUFFLE)

class Skeleton():
    """
    The shape of a shuffle monomial with its leaf labels erased.
    """

    def __init__(self,
                 shape: TreeMonomial,
                 flavor: SkeletonFlavor = SkeletonFlavor.PLANAR):
        shape = shape.erase_labels().with_kind(OperadKind.SHUFFLE)
        if flavor is SkeletonFlavor.TREE:
            shape = _sorted_shape(shape)
        self._shape = shape
        self._flavor = flavor

    @property
    def shape(self) -> TreeMonomial:
        """
        The placeholder monomial describing this skeleton.
        """
        return self._shape

    @property
    def flavor(self) -> SkeletonFlavor:
        """
        Whether the skeleton is planar or a tree skeleton.
        """
        return self._flavor

    @property
    def key(self) -> str:
        """
        The text encoding of the shape.
        """
        return self._shape.key

    @property
    def arity(self) -> int:
        """
        The number of leaves of the skeleton.
        """
        return self._shape.arity

    def planar_realizations(self) -> List[Skeleton]:
        """
        All planar skeletons obtained by reordering the children at each
        vertex. For a planar skeleton these are all planar skeletons with
        the same tree skeleton.
        """
        return [Skeleton(shape, SkeletonFlavor.PLANAR)
                for shape in _planar_realizations(self._shape)]

    def labelings(self) -> List[TreeMonomial]:
        """
        All shuffle monomials with this skeleton, sorted by their encoding.
        """
        if self._flavor is SkeletonFlavor.PLANAR:
            shapes = [self._shape]
        else:
            shapes = _planar_realizations(self._shape)
        found = {}
        for shape in shapes:
            for monomial in shuffle_labelings(shape):
                found[monomial.key] = monomial
        return [found[key] for key in sorted(found)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Skeleton):
            return False
        return self._flavor is other.flavor and self.key == other.key

    def __hash__(self) -> int:
        return hash((self._flavor, self.key))

    def __str__(self) -> str:
        return self.key

    def __repr__(self) -> str:
        return f"Skeleton({self.key!r}, {self._flavor.value})"

def planar_skeleton(m: TreeMonomial) -> Skeleton:
    """
    Erases the leaf labels of a shuffle monomial, keeping the child order.

    Raises:
        KindMismatchError: If `m` is a non-symmetric monomial.
    """
    if m.kind is not OperadKind.SHUFFLE:
        errstr = "Skeletons are only defined for shuffle monomials!"
        raise KindMismatchError(errstr)
    return Skeleton(m, SkeletonFlavor.PLANAR)

def tree_skeleton(m: TreeMonomial) -> Skeleton:
    """
    Erases the leaf labels and the planar order of a shuffle monomial.

    Raises:
        KindMismatchError: If `m` is a non-symmetric monomial.
    """
    if m.kind is not OperadKind.SHUFFLE:
        errstr = "Skeletons are only defined for shuffle monomials!"
        raise KindMismatchError(errstr)
    return Skeleton(m, SkeletonFlavor.TREE)

class Stump():
    """
    The truncation of a monomial at depth bound d.

    All leaves of the shape are at level at most d-1. In the non-symmetric
    case the shape is a placeholder monomial, in the shuffle case it is a
    planar skeleton.
    """

    def __init__(self,
                 shape: Union[Skeleton, TreeMonomial],
                 depth_bound: int):
        tree = shape.shape if isinstance(shape, Skeleton) else shape
        if depth_bound < 1:
            errstr = f"The depth bound of a stump has to be positive, not {depth_bound}!"
            raise ValueError(errstr)
        if tree.depth > depth_bound - 1:
            errstr = (f"The shape {tree.key} has leaves deeper than the bound"
                      f" {depth_bound - 1}!")
            raise ValueError(errstr)
        self._shape = shape
        self._tree = tree
        self._depth_bound = depth_bound

    @property
    def shape(self) -> Union[Skeleton, TreeMonomial]:
        """
        The skeleton (shuffle) or monomial (non-symmetric) of the stump.
        """
        return self._shape

    @property
    def tree(self) -> TreeMonomial:
        """
        The placeholder monomial underlying the shape.
        """
        return self._tree

    @property
    def depth_bound(self) -> int:
        """
        The depth bound d.
        """
        return self._depth_bound

    @property
    def key(self) -> str:
        """
        The text encoding of the shape.
        """
        return self._tree.key

    def is_identity(self) -> bool:
        """
        Whether this is the stump of the identity.
        """
        return self._tree.is_leaf()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Stump):
            return False
        return (self._depth_bound == other.depth_bound
                and self._tree == other.tree)

    def __hash__(self) -> int:
        return hash((self._depth_bound, self._tree))

    def __str__(self) -> str:
        return self.key

    def __repr__(self) -> str:
        return f"Stump({self.key!r}, d={self._depth_bound})"

def stump(v: TreeMonomial, d: int) -> Stump:
    """
    The stump of `v` with respect to the depth bound `d`.

    All vertices at level at most d-1 are kept, the edges leaving level
    d-1 become leaves. For shuffle monomials the planar skeleton of this
    truncation is used.

    Args:
        v (TreeMonomial): The monomial.
        d (int): The depth bound, the maximal leaf level of the relations.

    Returns:
        Stump: The stump of `v`.
    """
    if d < 1:
        errstr = f"The depth bound has to be positive, not {d}!"
        raise ValueError(errstr)
    truncation = v.truncated(d - 1)
    if v.kind is OperadKind.SHUFFLE:
        return Stump(planar_skeleton(truncation), d)
    return Stump(truncation.erase_labels(), d)
