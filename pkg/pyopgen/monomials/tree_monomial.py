"""
Tree monomials, the basis elements of free operads.

A tree monomial is a rooted planar tree whose internal vertices are
labelled by generators. In a shuffle operad the leaves are additionally
labelled by {1, ..., n}. Leaves without a label are placeholders; they are
used for non-symmetric monomials and for skeletons.

The text form of a monomial is `name(child,child,...)` with leaves written
as `x1`, `x2`, ... or as `-` for a placeholder, e.g. `m(m(x1,x2),x3)`. This
text form is also the canonical key by which monomials are compared and
hashed.
"""
from __future__ import annotations
from typing import Dict, Iterable, Iterator, List, Union

from .generator import Generator, OperadKind
from ..opgen_exceptions import ArityMismatchError, KindMismatchError

class TreeMonomial():
    """
    An immutable tree monomial.

    Either a leaf, carrying a positive label or no label at all, or a node
    carrying a generator and as many children as the generator has inputs.
    All vertices of a tree share the same operad kind.
    """
    __slots__ = ("_generator", "_children", "_label", "_kind", "_key",
                 "_arity", "_degree", "_depth", "_min_leaf", "_nvertices")

    def __init__(self,
                 generator: Union[Generator, None] = None,
                 children: Union[Iterable[TreeMonomial], None] = None,
                 label: Union[int, None] = None,
                 kind: OperadKind = OperadKind.NONSYM):
        self._generator = generator
        self._kind = kind
        if generator is None:
            if children:
                errstr = "A leaf cannot have children!"
                raise ValueError(errstr)
            if label is not None and label < 1:
                errstr = f"Leaf labels have to be positive, not {label}!"
                raise ValueError(errstr)
            if label is not None and kind is OperadKind.NONSYM:
                errstr = "Leaves of non-symmetric monomials carry no label!"
                raise KindMismatchError(errstr)
            self._children = ()
            self._label = label
            self._key = "-" if label is None else f"x{label}"
            self._arity = 1
            self._degree = 0
            self._depth = 0
            self._min_leaf = label
            self._nvertices = 0
            return
        children = tuple(children) if children is not None else ()
        if len(children) != generator.arity:
            errstr = (f"Generator {generator.name} has arity {generator.arity}"
                      f" but received {len(children)} children!")
            raise ArityMismatchError(errstr)
        for child in children:
            if child.kind is not kind:
                errstr = "Children of a monomial must have the same kind as the monomial!"
                raise KindMismatchError(errstr)
        self._children = children
        self._label = None
        self._key = generator.name + "(" + ",".join(child.key for child in children) + ")"
        self._arity = sum(child.arity for child in children)
        self._degree = generator.weight + sum(child.degree for child in children)
        self._depth = 1 + max(child.depth for child in children)
        minima = [child.min_leaf for child in children]
        self._min_leaf = None if None in minima else min(minima)
        self._nvertices = 1 + sum(child.nvertices for child in children)

    @classmethod
    def leaf(cls,
             label: Union[int, None] = None,
             kind: OperadKind = OperadKind.NONSYM) -> TreeMonomial:
        """
        Creates a leaf, i.e. the identity monomial.

        Args:
            label (Union[int, None]): The label of the leaf. None gives a
                placeholder leaf.
            kind (OperadKind): The kind of the monomial. Labelled leaves
                require the shuffle kind.
        """
        if label is not None and kind is OperadKind.NONSYM:
            kind = OperadKind.SHUFFLE
        return cls(label=label, kind=kind)

    @classmethod
    def node(cls,
             generator: Generator,
             children: List[TreeMonomial]) -> TreeMonomial:
        """
        Creates a monomial with root `generator`, inferring the kind from
        the children.
        """
        children = list(children)
        kind = children[0].kind if children else OperadKind.NONSYM
        return cls(generator=generator, children=children, kind=kind)

    @classmethod
    def corolla(cls,
                generator: Generator,
                kind: OperadKind = OperadKind.NONSYM,
                labelled: bool = False) -> TreeMonomial:
        """
        The monomial consisting of a single vertex labelled by `generator`.

        Args:
            generator (Generator): The label of the vertex.
            kind (OperadKind): The kind of the monomial.
            labelled (bool): If True and the kind is shuffle, the leaves
                are labelled 1, ..., arity. Otherwise they are placeholders.
        """
        if labelled and kind is OperadKind.SHUFFLE:
            leaves = [cls(label=i + 1, kind=kind) for i in range(generator.arity)]
        else:
            leaves = [cls(kind=kind) for _ in range(generator.arity)]
        return cls(generator=generator, children=leaves, kind=kind)

    @property
    def generator(self) -> Union[Generator, None]:
        """
        The generator at the root, None for a leaf.
        """
        return self._generator

    @property
    def children(self) -> tuple:
        """
        The children of the root, in planar order.
        """
        return self._children

    @property
    def label(self) -> Union[int, None]:
        """
        The label of a leaf. None for placeholders and internal vertices.
        """
        return self._label

    @property
    def kind(self) -> OperadKind:
        """
        The operad kind of this monomial.
        """
        return self._kind

    @property
    def key(self) -> str:
        """
        The canonical text encoding of this monomial.
        """
        return self._key

    @property
    def arity(self) -> int:
        """
        The number of leaves.
        """
        return self._arity

    @property
    def degree(self) -> int:
        """
        The sum of the weights of all internal vertices.
        """
        return self._degree

    @property
    def depth(self) -> int:
        """
        The maximal level of a leaf. The root is at level 0.
        """
        return self._depth

    @property
    def min_leaf(self) -> Union[int, None]:
        """
        The smallest leaf label, None if some leaf is a placeholder.
        """
        return self._min_leaf

    @property
    def nvertices(self) -> int:
        """
        The number of internal vertices.
        """
        return self._nvertices

    def is_leaf(self) -> bool:
        """
        Whether this monomial is a single leaf.
        """
        return self._generator is None

    def is_placeholder(self) -> bool:
        """
        Whether this monomial is a leaf without label.
        """
        return self._generator is None and self._label is None

    def nchildren(self) -> int:
        """
        The number of children of the root.
        """
        return len(self._children)

    def leaf_labels(self) -> List[Union[int, None]]:
        """
        The labels of the leaves from left to right.
        """
        if self.is_leaf():
            return [self._label]
        labels = []
        for child in self._children:
            labels.extend(child.leaf_labels())
        return labels

    def subtrees(self) -> Iterator[TreeMonomial]:
        """
        Iterates over all subtrees in pre-order, starting with the
        monomial itself.
        """
        yield self
        for child in self._children:
            yield from child.subtrees()

    def generators(self) -> List[Generator]:
        """
        The generators labelling the internal vertices in pre-order.
        """
        return [sub.generator for sub in self.subtrees() if not sub.is_leaf()]

    def truncated(self, depth: int) -> TreeMonomial:
        """
        Cuts the monomial below the given level.

        All internal vertices at a level smaller than `depth` are kept and
        every edge leaving level `depth - 1` becomes a leaf. The new leaf
        carries the smallest label of the removed subtree.

        Args:
            depth (int): The maximal level of a leaf in the result.

        Returns:
            TreeMonomial: The truncated monomial.
        """
        if depth < 0:
            errstr = f"Cannot truncate a monomial at negative level {depth}!"
            raise ValueError(errstr)
        if self.is_leaf():
            return self
        if depth == 0:
            return TreeMonomial(label=self._min_leaf, kind=self._kind)
        if self._depth <= depth:
            return self
        children = [child.truncated(depth - 1) for child in self._children]
        return TreeMonomial(self._generator, children, kind=self._kind)

    def erase_labels(self) -> TreeMonomial:
        """
        Replaces every leaf label by a placeholder.
        """
        if self.is_leaf():
            if self._label is None:
                return self
            return TreeMonomial(kind=self._kind)
        if all(label is None for label in self.leaf_labels()):
            return self
        children = [child.erase_labels() for child in self._children]
        return TreeMonomial(self._generator, children, kind=self._kind)

    def with_labels(self, labels: Iterable[int]) -> TreeMonomial:
        """
        Assigns labels to the leaves from left to right.

        The result is a shuffle monomial. No validity check is performed,
        use `is_valid_shuffle` for that.
        """
        iterator = iter(labels)
        return self._assign_labels(iterator)

    def _assign_labels(self, iterator: Iterator[int]) -> TreeMonomial:
        if self.is_leaf():
            return TreeMonomial(label=next(iterator), kind=OperadKind.SHUFFLE)
        children = [child._assign_labels(iterator) for child in self._children]
        return TreeMonomial(self._generator, children, kind=OperadKind.SHUFFLE)

    def relabeled(self, mapping: Dict[int, int]) -> TreeMonomial:
        """
        Replaces every leaf label `i` by `mapping[i]`.
        """
        if self.is_leaf():
            if self._label is None:
                return self
            return TreeMonomial(label=mapping[self._label], kind=self._kind)
        children = [child.relabeled(mapping) for child in self._children]
        return TreeMonomial(self._generator, children, kind=self._kind)

    def with_kind(self, kind: OperadKind) -> TreeMonomial:
        """
        The same placeholder shape with another operad kind.
        """
        if kind is self._kind:
            return self
        if self.is_leaf():
            if self._label is not None and kind is OperadKind.NONSYM:
                return TreeMonomial(kind=kind)
            return TreeMonomial(label=self._label, kind=kind)
        children = [child.with_kind(kind) for child in self._children]
        return TreeMonomial(self._generator, children, kind=kind)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeMonomial):
            return False
        return self._kind is other.kind and self._key == other.key

    def __hash__(self) -> int:
        return hash((self._kind, self._key))

    def __lt__(self, other: TreeMonomial) -> bool:
        return self._key < other.key

    def __str__(self) -> str:
        return self._key

    def __repr__(self) -> str:
        return f"TreeMonomial({self._key!r}, {self._kind.value})"
