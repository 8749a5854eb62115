"""
Generators of an operad, i.e. the labels of the internal vertices of tree
monomials.
"""
from __future__ import annotations
import re
from enum import Enum

class OperadKind(Enum):
    """
    The two kinds of operads that can be presented.

    NONSYM: Non-symmetric operads, monomials are planar trees without leaf
        labels.
    SHUFFLE: Shuffle operads, monomials are planar trees whose leaves are
        labelled by {1, ..., n} in canonical realization.
    """
    NONSYM = "nonsym"
    SHUFFLE = "shuffle"

    def is_shuffle(self) -> bool:
        """
        Whether this kind has labelled leaves.
        """
        return self is OperadKind.SHUFFLE

_NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

class Generator():
    """
    An operation of fixed arity that generates an operad.

    The weight is the internal grading degree of the generator. It is the
    exponent of the grading variable t contributed by every vertex labelled
    with this generator.
    """

    def __init__(self, name: str, arity: int, weight: int = 1):
        if not _NAME_PATTERN.match(name):
            errstr = f"Generator name {name!r} is not an identifier!"
            raise ValueError(errstr)
        if arity < 1:
            errstr = f"The arity of generator {name} has to be positive, not {arity}!"
            raise ValueError(errstr)
        if weight < 0:
            errstr = f"The weight of generator {name} has to be non-negative, not {weight}!"
            raise ValueError(errstr)
        self._name = name
        self._arity = arity
        self._weight = weight

    @property
    def name(self) -> str:
        """
        The name of the generator.
        """
        return self._name

    @property
    def arity(self) -> int:
        """
        The number of inputs of the generator.
        """
        return self._arity

    @property
    def weight(self) -> int:
        """
        The internal grading degree of the generator.
        """
        return self._weight

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Generator):
            return False
        return (self._name == other.name
                and self._arity == other.arity
                and self._weight == other.weight)

    def __hash__(self) -> int:
        return hash((self._name, self._arity, self._weight))

    def __repr__(self) -> str:
        if self._weight == 1:
            return f"Generator({self._name!r}, {self._arity})"
        return f"Generator({self._name!r}, {self._arity}, weight={self._weight})"
