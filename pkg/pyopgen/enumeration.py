"""
Brute-force enumeration of the monomial basis of a presented operad.

The basis of P(n) consists of the monomials of arity n that are not
divisible by any relation. Such a monomial is a generator with basis
monomials of smaller arity as children, so only left divisors at the new
root have to be excluded. To decide this later on, a monomial is only
remembered through its signature: its truncation at depth d-1, where every
cut edge becomes a leaf carrying the smallest label below it. Counting
works on signatures with multiplicities and never builds full monomials.
"""
from __future__ import annotations
import logging
from itertools import product
from typing import Callable, Dict, List, Tuple, Union

from sympy.polys.rings import PolyElement
from tqdm import tqdm

from .monomials.generator import Generator, OperadKind
from .monomials.tree_monomial import TreeMonomial
from .monomials.divisibility import RootDivisorIndex
from .series.truncated_series import COEFFICIENT_RING, t, evaluate_t
from .opgen_exceptions import EnumerationLimitError
from .util import compositions, shuffle_distributions

logger = logging.getLogger(__name__)

DEFAULT_COUNT_CEILING = 5 * 10**7

def _identity(kind: OperadKind) -> TreeMonomial:
    label = 1 if kind is OperadKind.SHUFFLE else None
    return TreeMonomial(label=label, kind=kind)

def _label_maps(n: int, sizes: List[int], kind: OperadKind):
    if kind is OperadKind.NONSYM:
        yield [None] * len(sizes)
        return
    for blocks in shuffle_distributions(tuple(range(1, n + 1)), sizes):
        yield [{i + 1: label for i, label in enumerate(block)} for block in blocks]

def _attach(generator: Generator,
            children: List[TreeMonomial],
            mappings: list,
            kind: OperadKind) -> TreeMonomial:
    if kind is OperadKind.SHUFFLE:
        children = [child.relabeled(mapping)
                    for child, mapping in zip(children, mappings)]
    return TreeMonomial(generator, children, kind=kind)

class _Counter():
    """
    Keeps track of the candidates examined in one arity.
    """

    def __init__(self, arity: int, ceiling: int):
        self.arity = arity
        self.ceiling = ceiling
        self.examined = 0

    def add(self, amount: int):
        self.examined += amount
        if self.examined > self.ceiling:
            errstr = (f"More than {self.ceiling} candidate monomials in arity"
                      f" {self.arity}, increase the ceiling or lower the arity!")
            raise EnumerationLimitError(errstr)

def _size(value: PolyElement) -> int:
    return int(evaluate_t(value, 1))

def _add_to(layer: Dict[TreeMonomial, PolyElement],
            signature: TreeMonomial,
            value: PolyElement):
    layer[signature] = layer.get(signature, COEFFICIENT_RING.zero) + value

def _unary_closure(p,
                   frontier: List[Tuple[TreeMonomial, PolyElement]],
                   index: RootDivisorIndex,
                   counter: _Counter,
                   merge: Union[Callable, None] = None) -> List[Tuple[TreeMonomial, PolyElement]]:
    """
    The monomials, with their values, obtained from `frontier` by applying
    unary generators round by round without creating a relation.

    `merge` is applied to the survivors of every round before they are
    extended further. A chain of survivors longer than the number of
    signatures seen so far has to pass a signature twice, so the component
    is infinite.
    """
    unary = [generator for generator in p.generators if generator.arity == 1]
    if not unary:
        return []
    depth = p.depth_bound - 1
    seen = {monomial.truncated(depth) for monomial, _ in frontier}
    closure = []
    rounds = 0
    while frontier:
        found = []
        for generator in unary:
            for monomial, value in frontier:
                counter.add(_size(value))
                composite = TreeMonomial(generator, [monomial], kind=monomial.kind)
                if not index.left_divided(composite):
                    found.append((composite, value * t**generator.weight))
        if merge is not None:
            found = merge(found)
        rounds += 1
        seen.update(monomial.truncated(depth) for monomial, _ in found)
        if found and rounds >= len(seen):
            errstr = (f"The component of arity {counter.arity} is infinite"
                      " dimensional, unary generators can be iterated forever!")
            raise EnumerationLimitError(errstr)
        closure.extend(found)
        frontier = found
    return closure

def _apply_unary(p,
                 layer: Dict[TreeMonomial, PolyElement],
                 index: RootDivisorIndex,
                 counter: _Counter):
    """
    Closes a layer of signatures under the unary generators.
    """
    depth = p.depth_bound - 1

    def merge(found):
        merged: Dict[TreeMonomial, PolyElement] = {}
        for monomial, value in found:
            _add_to(merged, monomial.truncated(depth), value)
        return list(merged.items())

    for signature, value in _unary_closure(p, list(layer.items()), index, counter,
                                           merge=merge):
        _add_to(layer, signature, value)

def _signature_layers(p,
                      n_max: int,
                      ceiling: int,
                      progress: bool = False) -> List[Dict[TreeMonomial, PolyElement]]:
    """
    The signatures of the basis monomials of arity 1, ..., n_max, each with
    its graded multiplicity.
    """
    if n_max < 1:
        errstr = f"The maximal arity has to be positive, not {n_max}!"
        raise ValueError(errstr)
    kind = p.kind
    depth = p.depth_bound - 1
    index = RootDivisorIndex(p.relations)
    layers: List[Dict[TreeMonomial, PolyElement]] = [{}]
    for n in tqdm(range(1, n_max + 1), disable=not progress):
        counter = _Counter(n, ceiling)
        layer: Dict[TreeMonomial, PolyElement] = {}
        if n == 1:
            layer[_identity(kind)] = COEFFICIENT_RING.one
        for generator in p.generators:
            k = generator.arity
            if k < 2 or k > n:
                continue
            weight = t**generator.weight
            for sizes in compositions(n, k):
                options = [list(layers[size].items()) for size in sizes]
                if any(len(option) == 0 for option in options):
                    continue
                for combination in product(*options):
                    children = [signature for signature, _ in combination]
                    value = weight
                    for _, multiplicity in combination:
                        value = value * multiplicity
                    count = _size(value)
                    for mappings in _label_maps(n, list(sizes), kind):
                        counter.add(count)
                        composite = _attach(generator, children, mappings, kind)
                        if index.left_divided(composite):
                            continue
                        _add_to(layer, composite.truncated(depth), value)
        _apply_unary(p, layer, index, counter)
        logger.debug(f"Arity {n}: {len(layer)} signatures,"
                     f" {counter.examined} candidates examined.")
        layers.append(layer)
    return layers[1:]

def basis_dims_weighted(p,
                        n_max: int,
                        ceiling: int = DEFAULT_COUNT_CEILING,
                        progress: bool = False) -> List[PolyElement]:
    """
    The graded dimensions H_{P(n)}(t) for n = 1, ..., n_max.

    Every basis monomial contributes t to the power of its degree, the
    sum of the weights of its vertices.

    Args:
        p (Presentation): The presentation.
        n_max (int): The maximal arity.
        ceiling (int): The maximal number of candidate monomials examined
            in one arity.
        progress (bool): Whether to show a progress bar over the arities.

    Returns:
        List[PolyElement]: Polynomials in t with non-negative integer
            coefficients.

    Raises:
        EnumerationLimitError: If the ceiling is exceeded or a component is
            infinite dimensional.
    """
    layers = _signature_layers(p, n_max, ceiling, progress=progress)
    result = []
    for layer in layers:
        total = COEFFICIENT_RING.zero
        for value in layer.values():
            total += value
        result.append(total)
    return result

def basis_dims(p,
               n_max: int,
               ceiling: int = DEFAULT_COUNT_CEILING,
               progress: bool = False) -> List[int]:
    """
    The dimensions dim P(n) for n = 1, ..., n_max, found by counting the
    monomials not divisible by any relation.
    """
    return [_size(value)
            for value in basis_dims_weighted(p, n_max, ceiling, progress=progress)]

def basis_monomials(p,
                    n: int,
                    ceiling: int = DEFAULT_COUNT_CEILING) -> List[TreeMonomial]:
    """
    The basis of P(n), sorted by encoding.

    Shuffle monomials are returned in canonical realization, non-symmetric
    ones with placeholder leaves.
    """
    if n < 1:
        errstr = f"The arity has to be positive, not {n}!"
        raise ValueError(errstr)
    kind = p.kind
    index = RootDivisorIndex(p.relations)
    bases: List[List[TreeMonomial]] = [[]]
    for arity in range(1, n + 1):
        counter = _Counter(arity, ceiling)
        basis = [_identity(kind)] if arity == 1 else []
        for generator in p.generators:
            k = generator.arity
            if k < 2 or k > arity:
                continue
            for sizes in compositions(arity, k):
                for children in product(*[bases[size] for size in sizes]):
                    for mappings in _label_maps(arity, list(sizes), kind):
                        counter.add(1)
                        composite = _attach(generator, list(children), mappings, kind)
                        if not index.left_divided(composite):
                            basis.append(composite)
        frontier = [(monomial, COEFFICIENT_RING.one) for monomial in basis]
        basis.extend(monomial for monomial, _ in
                      _unary_closure(p, frontier, index, counter))
        bases.append(basis)
    return sorted(bases[n], key=lambda monomial: monomial.key)
