"""
The closure of the stump map.

Every basis monomial v = mu(v_1, ..., v_k) is determined up to the stump
level by its root generator and the stumps of its children: whether a
relation left-divides v, and the stump of v itself, only depend on the
stumps of the v_i. Starting from the identity, all stumps reachable by
attaching known stumps below a generator are collected together with the
transitions (mu, child stumps) -> stump.

Stumps that behave identically below every generator can be merged into
one class. Their profile consists of the truncation one level above the
stump level, which fixes the stump of every parent, and of the relation
subtrees that left-divide them, which fixes which parents are relations.
"""
from __future__ import annotations
import logging
from itertools import product
from typing import Dict, List, Tuple, Union

from ..monomials.generator import Generator, OperadKind
from ..monomials.tree_monomial import TreeMonomial
from ..monomials.divisibility import RootDivisorIndex, left_divides
from ..monomials.skeleton import Skeleton, Stump

logger = logging.getLogger(__name__)

class StumpClass():
    """
    A set of stumps with the same behaviour below every generator.

    Attributes:
        index (int): The position of the class in discovery order.
        representative (TreeMonomial): The placeholder shape of the first
            stump found in the class.
        members (List[Stump]): All stumps found in the class.
    """

    def __init__(self, index: int, representative: Stump):
        self.index = index
        self.representative = representative.tree
        self.members = [representative]

    def is_ground(self) -> bool:
        """
        Whether this is the class of the identity.
        """
        return self.representative.is_leaf()

    def corolla_generator(self) -> Union[Generator, None]:
        """
        The generator if the class consists of its corolla only.
        """
        if len(self.members) != 1 or self.is_ground():
            return None
        if all(child.is_leaf() for child in self.representative.children):
            return self.representative.generator
        return None

    def member_keys(self) -> List[str]:
        return [member.key for member in self.members]

class StumpClosure():
    """
    All stump classes reachable from the identity and the transitions
    between them.

    In the shuffle case the stumps are planar skeletons and relations are
    tested through their planar skeletons, which is exact for shuffle
    regular presentations.

    Attributes:
        classes (List[StumpClass]): The classes, the identity first.
        transitions (List[Tuple[Generator, Tuple[int, ...], int]]): Every
            accepted composition as (root generator, child classes, target
            class).
    """

    def __init__(self, p, merge_equivalent: bool = True):
        self.kind = p.kind
        self.depth_bound = p.depth_bound
        self.merge_equivalent = merge_equivalent
        shapes = self._relation_shapes(p)
        self._index = RootDivisorIndex(shapes)
        patterns = {}
        for shape in shapes:
            for child in shape.children:
                if not child.is_leaf():
                    patterns.setdefault(child.key, child)
        self._child_patterns = list(patterns.values())
        self.classes: List[StumpClass] = []
        self._class_of_profile: Dict[tuple, int] = {}
        self._known_members = set()
        self.transitions: List[Tuple[Generator, Tuple[int, ...], int]] = []
        self._close(p.generators)
        logger.info(f"Found {len(self.classes)} stump classes and"
                    f" {len(self.transitions)} transitions.")

    def _relation_shapes(self, p) -> List[TreeMonomial]:
        if self.kind is OperadKind.SHUFFLE:
            found = {}
            for relation in p.relations:
                shape = relation.erase_labels()
                found.setdefault(shape.key, shape)
            return list(found.values())
        return list(p.relations)

    def _stump(self, tree: TreeMonomial) -> Stump:
        if self.kind is OperadKind.SHUFFLE:
            return Stump(Skeleton(tree), self.depth_bound)
        return Stump(tree, self.depth_bound)

    def profile(self, tree: TreeMonomial) -> tuple:
        """
        The key deciding which class a stump belongs to.
        """
        if not self.merge_equivalent:
            return (tree.key,)
        if tree.is_leaf():
            return (True,)
        upper = tree.truncated(max(self.depth_bound - 2, 0)).key
        dividing = frozenset(pattern.key for pattern in self._child_patterns
                             if left_divides(pattern, tree))
        return (False, upper, dividing)

    def _class_of(self, tree: TreeMonomial) -> Tuple[int, bool]:
        profile = self.profile(tree)
        if profile in self._class_of_profile:
            index = self._class_of_profile[profile]
            if tree.key not in self._known_members:
                self._known_members.add(tree.key)
                self.classes[index].members.append(self._stump(tree))
            return index, False
        index = len(self.classes)
        self.classes.append(StumpClass(index, self._stump(tree)))
        self._class_of_profile[profile] = index
        self._known_members.add(tree.key)
        return index, True

    def _close(self, generators: List[Generator]):
        self._class_of(TreeMonomial(kind=self.kind))
        done = set()
        changed = True
        while changed:
            changed = False
            for generator in generators:
                nclasses = len(self.classes)
                for combination in product(range(nclasses), repeat=generator.arity):
                    if (generator.name, combination) in done:
                        continue
                    done.add((generator.name, combination))
                    children = [self.classes[i].representative for i in combination]
                    composite = TreeMonomial(generator, children, kind=self.kind)
                    if self._index.left_divided(composite):
                        continue
                    target = composite.truncated(self.depth_bound - 1)
                    index, new = self._class_of(target)
                    self.transitions.append((generator, combination, index))
                    changed = changed or new

    def variable_names(self) -> List[str]:
        """
        Names for the classes: y0 for the identity, y_NAME for a class that
        is the corolla of the generator NAME and y1, y2, ... otherwise.
        """
        names = []
        counter = 1
        for stump_class in self.classes:
            generator = stump_class.corolla_generator()
            if stump_class.is_ground():
                names.append("y0")
            elif generator is not None:
                names.append(f"y_{generator.name}")
            else:
                names.append(f"y{counter}")
                counter += 1
        return names
