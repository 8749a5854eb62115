"""
Random presentations used by the property tests and the experiments.
"""
from __future__ import annotations
from typing import List, Union

import numpy as np
from numpy.random import default_rng

from .monomials.generator import Generator, OperadKind
from .monomials.tree_monomial import TreeMonomial
from .monomials.skeleton import Skeleton, SkeletonFlavor
from .presentation.presentation import Presentation
from .presentation.regularity import check_shuffle_regular

GENERATOR_NAMES = ("a", "b", "c", "d")

def random_generators(rng: np.random.Generator,
                      max_generators: int = 2,
                      min_arity: int = 2,
                      max_arity: int = 3) -> List[Generator]:
    """
    Draws between one and `max_generators` generators with arities in
    [min_arity, max_arity].
    """
    if not 1 <= max_generators <= len(GENERATOR_NAMES):
        errstr = f"Between 1 and {len(GENERATOR_NAMES)} generators are supported!"
        raise ValueError(errstr)
    if min_arity < 1 or max_arity < min_arity:
        errstr = f"The arity range [{min_arity}, {max_arity}] is empty or contains 0!"
        raise ValueError(errstr)
    number = int(rng.integers(1, max_generators + 1))
    arities = rng.integers(min_arity, max_arity + 1, size=number)
    return [Generator(name, int(arity))
            for name, arity in zip(GENERATOR_NAMES, arities)]

def random_shape(rng: np.random.Generator,
                 generators: List[Generator],
                 max_leaf_level: int,
                 kind: OperadKind = OperadKind.NONSYM,
                 expand_probability: float = 0.5) -> TreeMonomial:
    """
    Draws a monomial with placeholder leaves, whose root is a vertex and
    whose leaves all sit at level at most `max_leaf_level`.
    """
    if max_leaf_level < 1:
        errstr = "A monomial with a vertex has leaves at level at least 1!"
        raise ValueError(errstr)
    generator = generators[int(rng.integers(len(generators)))]
    children = []
    for _ in range(generator.arity):
        if max_leaf_level > 1 and rng.random() < expand_probability:
            children.append(random_shape(rng, generators, max_leaf_level - 1,
                                         kind=kind,
                                         expand_probability=expand_probability))
        else:
            children.append(TreeMonomial(kind=kind))
    return TreeMonomial(generator, children, kind=kind)

def random_nonsym_presentation(seed: Union[int, np.random.Generator, None] = None,
                               max_generators: int = 2,
                               max_arity: int = 3,
                               max_relations: int = 3,
                               max_leaf_level: int = 3) -> Presentation:
    """
    Draws a non-symmetric presentation.

    The relations have at least two vertices, so that every generator
    survives, and are reduced by the presentation.

    Args:
        seed (Union[int, np.random.Generator, None]): A seed or a generator
            for the random numbers.
        max_generators (int): The maximal number of generators.
        max_arity (int): The maximal arity of a generator, at least 2.
        max_relations (int): The maximal number of relations drawn.
        max_leaf_level (int): The maximal level of a leaf in a relation.
    """
    rng = default_rng(seed=seed)
    generators = random_generators(rng, max_generators, max_arity=max_arity)
    relations = {}
    for _ in range(int(rng.integers(0, max_relations + 1))):
        relation = random_shape(rng, generators, max_leaf_level)
        while relation.nvertices < 2:
            relation = random_shape(rng, generators, max_leaf_level)
        relations[relation.key] = relation
    return Presentation(OperadKind.NONSYM, generators, list(relations.values()),
                        name="random nonsym")

def random_shuffle_presentation(seed: Union[int, np.random.Generator, None] = None,
                                max_generators: int = 2,
                                max_arity: int = 3,
                                max_relations: int = 3,
                                max_leaf_level: int = 2,
                                max_relation_arity: int = 5) -> Presentation:
    """
    Draws a shuffle regular presentation: every relation is given as a
    random planar skeleton and expanded into all its shuffle labelings.

    Skeletons with more than `max_relation_arity` leaves are drawn again,
    and so are skeleton sets that lose regularity when they are reduced.
    """
    rng = default_rng(seed=seed)
    generators = random_generators(rng, max_generators, max_arity=max_arity)
    while True:
        p = _draw_shuffle_relations(rng, generators, max_relations,
                                    max_leaf_level, max_relation_arity)
        if check_shuffle_regular(p):
            return p

def _draw_shuffle_relations(rng: np.random.Generator,
                            generators: List[Generator],
                            max_relations: int,
                            max_leaf_level: int,
                            max_relation_arity: int) -> Presentation:
    skeletons = {}
    for _ in range(int(rng.integers(0, max_relations + 1))):
        shape = random_shape(rng, generators, max_leaf_level, kind=OperadKind.SHUFFLE)
        while shape.nvertices < 2 or shape.arity > max_relation_arity:
            shape = random_shape(rng, generators, max_leaf_level,
                                 kind=OperadKind.SHUFFLE)
        skeleton = Skeleton(shape, SkeletonFlavor.PLANAR)
        skeletons[skeleton.key] = skeleton
    relations = [monomial for skeleton in skeletons.values()
                 for monomial in skeleton.labelings()]
    return Presentation(OperadKind.SHUFFLE, generators, relations,
                        source_skeletons=list(skeletons.values()),
                        name="random shuffle")
