"""
The presentation of a monomial operad by generators and relations.
"""
from __future__ import annotations
import json
import logging
from typing import Dict, List, Union

from ..monomials.generator import Generator, OperadKind
from ..monomials.tree_monomial import TreeMonomial
from ..monomials.divisibility import divides, is_valid_shuffle
from ..monomials.skeleton import Skeleton
from ..opgen_exceptions import (ArityMismatchError,
                                DuplicateGeneratorError,
                                InvalidLabelingError,
                                KindMismatchError,
                                UnknownGeneratorError)

logger = logging.getLogger(__name__)

def reduce_relations(relations: List[TreeMonomial]) -> List[TreeMonomial]:
    """
    Removes duplicates and every relation that is divisible by another one.

    The order of the remaining relations is the order of their first
    appearance.
    """
    unique = {}
    for relation in relations:
        unique.setdefault(relation.key, relation)
    candidates = list(unique.values())
    reduced = []
    for relation in candidates:
        redundant = any(other is not relation and divides(other, relation)
                        for other in candidates)
        if not redundant:
            reduced.append(relation)
    return reduced

def _nested(monomial: TreeMonomial) -> Union[str, int, list]:
    if monomial.is_leaf():
        return "-" if monomial.label is None else monomial.label
    return [monomial.generator.name] + [_nested(child) for child in monomial.children]

class Presentation():
    """
    A finitely presented monomial operad F(generators)/(relations).

    The relations are leading monomials of a Groebner basis, or simply the
    monomial relations of a monomial operad. They are validated against the
    generator table and reduced, so that no relation divides another one.

    Attributes:
        kind (OperadKind): Non-symmetric or shuffle.
        generators (List[Generator]): The generators in declaration order.
        relations (List[TreeMonomial]): The reduced relations.
        source_skeletons (List[Skeleton]): Skeletons the relations were
            expanded from, if any.
    """

    def __init__(self,
                 kind: Union[OperadKind, str],
                 generators: List[Generator],
                 relations: List[TreeMonomial],
                 source_skeletons: Union[List[Skeleton], None] = None,
                 name: Union[str, None] = None):
        self._kind = OperadKind(kind)
        self._generators = list(generators)
        self._generator_table: Dict[str, Generator] = {}
        for generator in self._generators:
            if generator.name in self._generator_table:
                errstr = f"Generator {generator.name!r} is declared twice!"
                raise DuplicateGeneratorError(errstr)
            self._generator_table[generator.name] = generator
        for relation in relations:
            self._validate_relation(relation)
        self._relations = reduce_relations(list(relations))
        if len(self._relations) < len(relations):
            logger.info(f"Reduction removed {len(relations) - len(self._relations)} relations.")
        self._source_skeletons = list(source_skeletons or [])
        self._name = name

    def _validate_relation(self, relation: TreeMonomial):
        if relation.kind is not self._kind:
            errstr = (f"Relation {relation.key} is {relation.kind.value} but the"
                      f" operad is {self._kind.value}!")
            raise KindMismatchError(errstr)
        if relation.is_leaf():
            errstr = "The identity cannot be a relation!"
            raise InvalidLabelingError(errstr)
        for generator in relation.generators():
            declared = self._generator_table.get(generator.name)
            if declared is None:
                errstr = f"Relation {relation.key} uses the unknown generator {generator.name!r}!"
                raise UnknownGeneratorError(errstr)
            if declared.arity != generator.arity:
                errstr = (f"Generator {generator.name} is declared with arity"
                          f" {declared.arity} but used with arity {generator.arity}!")
                raise ArityMismatchError(errstr)
            if declared != generator:
                errstr = f"Generator {generator.name} is used with another weight than declared!"
                raise UnknownGeneratorError(errstr)
        if self._kind is OperadKind.SHUFFLE and not is_valid_shuffle(relation):
            errstr = f"Relation {relation.key} is not a shuffle monomial in canonical realization!"
            raise InvalidLabelingError(errstr)

    @property
    def kind(self) -> OperadKind:
        """
        The kind of the operad.
        """
        return self._kind

    @property
    def generators(self) -> List[Generator]:
        """
        The generators in declaration order.
        """
        return list(self._generators)

    @property
    def relations(self) -> List[TreeMonomial]:
        """
        The reduced relations.
        """
        return list(self._relations)

    @property
    def source_skeletons(self) -> List[Skeleton]:
        """
        The skeletons some of the relations were expanded from.
        """
        return list(self._source_skeletons)

    @property
    def name(self) -> Union[str, None]:
        """
        An optional name, e.g. of a built-in presentation.
        """
        return self._name

    @property
    def depth_bound(self) -> int:
        """
        The depth bound d, the maximal level of a leaf in a relation.

        It is at least 2, so that the stump of every generator corolla is
        the corolla itself.
        """
        depths = [relation.depth for relation in self._relations]
        return max([2] + depths)

    def generator(self, name: str) -> Generator:
        """
        Finds a generator by its name.
        """
        if name not in self._generator_table:
            errstr = f"There is no generator called {name!r}!"
            raise UnknownGeneratorError(errstr)
        return self._generator_table[name]

    def is_weighted(self) -> bool:
        """
        Whether some generator has a weight different from 1.
        """
        return any(generator.weight != 1 for generator in self._generators)

    def to_dict(self) -> dict:
        """
        A JSON compatible description of the presentation.

        Relations are nested arrays `[name, child, ...]` with leaves given
        as integers (shuffle) or `"-"` (non-symmetric).
        """
        return {"name": self._name,
                "kind": self._kind.value,
                "generators": [{"name": generator.name,
                                "arity": generator.arity,
                                "weight": generator.weight}
                               for generator in self._generators],
                "relations": [_nested(relation) for relation in self._relations],
                "skeletons": [{"flavor": skeleton.flavor.value,
                               "shape": _nested(skeleton.shape)}
                              for skeleton in self._source_skeletons]}

    def to_json(self, indent: Union[int, None] = None) -> str:
        """
        The presentation as a JSON string.
        """
        return json.dumps(self.to_dict(), indent=indent)

    def to_dsl(self) -> str:
        """
        The presentation written in the presentation language.
        """
        lines = [f"operad {self._kind.value}"]
        for generator in self._generators:
            line = f"gen {generator.name} : {generator.arity}"
            if generator.weight != 1:
                line += f" weight {generator.weight}"
            lines.append(line)
        for relation in self._relations:
            lines.append(f"rel {relation.key}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        name = "" if self._name is None else f"{self._name}, "
        return (f"Presentation({name}{self._kind.value}, "
                f"{len(self._generators)} generators, "
                f"{len(self._relations)} relations)")
