"""
A parser for the presentation language.

The language is line oriented, `#` starts a comment and `;` may separate
several statements on one line::

    operad shuffle
    gen alpha : 2
    gen beta : 2 weight 1
    rel beta(x1,alpha(x2,x3))
    skeleton planar alpha(alpha(-,-),-)

Monomials are written as `name(child,child,...)` with labelled leaves
`x1, x2, ...` or placeholders `-`. Whitespace inside monomials is ignored.
"""
from __future__ import annotations
import logging
from typing import Dict, Iterable, List, Tuple, Union

import pyparsing as pp

from .presentation import Presentation
from .regularity import expand_planar_skeleton, expand_tree_skeleton
from ..monomials.generator import Generator, OperadKind
from ..monomials.tree_monomial import TreeMonomial
from ..monomials.divisibility import canonical_realization
from ..monomials.skeleton import Skeleton, SkeletonFlavor
from ..opgen_exceptions import (ArityMismatchError,
                                DuplicateGeneratorError,
                                InvalidLabelingError,
                                KindMismatchError,
                                PresentationSyntaxError,
                                UnknownGeneratorError)

logger = logging.getLogger(__name__)

class _RawLeaf():
    __slots__ = ("label", "loc")

    def __init__(self, label: Union[int, None], loc: int):
        self.label = label
        self.loc = loc

class _RawNode():
    __slots__ = ("name", "children", "loc")

    def __init__(self, name: str, children: list, loc: int):
        self.name = name
        self.children = children
        self.loc = loc

class _Statement():
    __slots__ = ("keyword", "arguments", "line", "column")

    def __init__(self, keyword: str, arguments: list):
        self.keyword = keyword
        self.arguments = arguments
        self.line = 1
        self.column = 1

def _build_grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    identifier = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))
    lpar, rpar, colon = map(pp.Suppress, "():")

    monomial = pp.Forward()
    placeholder = pp.Literal("-").set_parse_action(
        lambda s, loc, toks: _RawLeaf(None, loc))
    labelled = pp.Regex(r"x[0-9]+").set_parse_action(
        lambda s, loc, toks: _RawLeaf(int(toks[0][1:]), loc))
    node = (identifier + lpar + pp.Group(pp.delimited_list(monomial)) + rpar)
    node.set_parse_action(
        lambda s, loc, toks: _RawNode(toks[0], list(toks[1]), loc))
    monomial <<= node | labelled | placeholder

    operad_stmt = (pp.Keyword("operad")
                   + (pp.Keyword("nonsym") | pp.Keyword("shuffle")))
    gen_stmt = (pp.Keyword("gen") + identifier + colon + integer
                + pp.Optional(pp.Suppress(pp.Keyword("weight")) + integer))
    rel_stmt = pp.Keyword("rel") + monomial
    skeleton_stmt = (pp.Keyword("skeleton")
                     + (pp.Keyword("planar") | pp.Keyword("tree"))
                     + monomial)
    statement = operad_stmt | gen_stmt | rel_stmt | skeleton_stmt
    statement.set_parse_action(lambda toks: _Statement(toks[0], list(toks[1:])))
    return statement, monomial

_STATEMENT, _MONOMIAL = _build_grammar()

def _split_statements(text: str) -> List[Tuple[str, int, int]]:
    """
    Splits the text into statements, returning the statement text with its
    line and the 0-based column of its first character.
    """
    pieces = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        offset = 0
        for piece in line.split(";"):
            if piece.strip():
                pieces.append((piece, line_number, offset))
            offset += len(piece) + 1
    return pieces

def _parse_statement(piece: str, line: int, offset: int) -> _Statement:
    try:
        statement = _STATEMENT.parse_string(piece, parse_all=True)[0]
    except pp.ParseException as err:
        raise PresentationSyntaxError(err.msg, line, offset + err.loc + 1) from err
    statement.line = line
    statement.column = offset + 1
    return statement

def _to_monomial(raw: Union[_RawLeaf, _RawNode],
                 generators: Dict[str, Generator],
                 infer: bool = False) -> TreeMonomial:
    """
    Builds the monomial of a parse tree. Monomials are built with the
    shuffle kind, so that leaf labels can be kept until the kind of the
    presentation is known.
    """
    if isinstance(raw, _RawLeaf):
        return TreeMonomial(label=raw.label, kind=OperadKind.SHUFFLE)
    children = [_to_monomial(child, generators, infer)
                for child in raw.children]
    if raw.name not in generators:
        if not infer:
            errstr = f"Unknown generator {raw.name!r}!"
            raise UnknownGeneratorError(errstr)
        generators[raw.name] = Generator(raw.name, len(children))
    generator = generators[raw.name]
    if generator.arity != len(children):
        errstr = (f"Generator {raw.name} has arity {generator.arity} but is"
                  f" applied to {len(children)} inputs!")
        raise ArityMismatchError(errstr)
    return TreeMonomial(generator, children, kind=OperadKind.SHUFFLE)

def _as_nonsym(monomial: TreeMonomial) -> TreeMonomial:
    """
    Drops leaf labels of a non-symmetric monomial, which are only allowed
    to number the leaves from left to right.
    """
    labels = monomial.leaf_labels()
    if all(label is None for label in labels):
        return monomial.with_kind(OperadKind.NONSYM)
    if labels != list(range(1, len(labels) + 1)):
        errstr = (f"Leaves of the non-symmetric monomial {monomial.key} have to"
                  " be placeholders or x1, ..., xn from left to right!")
        raise InvalidLabelingError(errstr)
    return monomial.erase_labels().with_kind(OperadKind.NONSYM)

def parse_monomial(text: str,
                   generators: Union[Dict[str, Generator], Iterable[Generator], None] = None,
                   kind: Union[OperadKind, str] = OperadKind.NONSYM) -> TreeMonomial:
    """
    Parses a single monomial in text form.

    The monomial is not brought into canonical realization, so that
    arbitrary planar trees can be written down.

    Args:
        text (str): The monomial, e.g. `m(m(x1,x2),x3)`.
        generators: The generators that may appear. If None, generators are
            created on the fly with the arity they are used with.
        kind (OperadKind): The kind of the monomial. Non-symmetric monomials
            may number their leaves x1, ..., xn from left to right, the
            labels are dropped.

    Returns:
        TreeMonomial: The monomial.
    """
    kind = OperadKind(kind)
    infer = generators is None
    if generators is None:
        table = {}
    elif isinstance(generators, dict):
        table = dict(generators)
    else:
        table = {generator.name: generator for generator in generators}
    try:
        raw = _MONOMIAL.parse_string(text, parse_all=True)[0]
    except pp.ParseException as err:
        raise PresentationSyntaxError(err.msg, err.lineno, err.col) from err
    monomial = _to_monomial(raw, table, infer)
    if kind is OperadKind.NONSYM:
        return _as_nonsym(monomial)
    return monomial.with_kind(OperadKind.SHUFFLE)

def _position_error(err: Exception, statement: _Statement):
    errstr = f"line {statement.line}, column {statement.column}: {err}"
    return type(err)(errstr)

def parse_presentation(text: str, name: Union[str, None] = None) -> Presentation:
    """
    Parses a presentation from the presentation language.

    Skeleton statements are expanded into all their shuffle labelings and
    kept as source skeletons. Shuffle relations are brought into canonical
    realization. Finally the relations are reduced.

    Args:
        text (str): The source text.
        name (Union[str, None]): An optional name of the presentation.

    Returns:
        Presentation: The validated presentation.

    Raises:
        PresentationSyntaxError: If the text does not follow the grammar.
        ArityMismatchError, InvalidLabelingError, DuplicateGeneratorError,
        UnknownGeneratorError, KindMismatchError: If the text is
            syntactically correct but describes an invalid presentation.
    """
    statements = [_parse_statement(*piece) for piece in _split_statements(text)]
    kind = OperadKind.NONSYM
    kind_statement = None
    generators = {}
    for statement in statements:
        if statement.keyword == "operad":
            if kind_statement is not None:
                errstr = "The operad kind is declared twice!"
                raise PresentationSyntaxError(errstr, statement.line,
                                              statement.column)
            kind_statement = statement
            kind = OperadKind(statement.arguments[0])
        elif statement.keyword == "gen":
            gen_name, arity = statement.arguments[0], statement.arguments[1]
            weight = statement.arguments[2] if len(statement.arguments) > 2 else 1
            if gen_name in generators:
                errstr = (f"line {statement.line}: generator {gen_name!r}"
                          " is declared twice!")
                raise DuplicateGeneratorError(errstr)
            try:
                generators[gen_name] = Generator(gen_name, arity, weight)
            except ValueError as err:
                raise PresentationSyntaxError(str(err), statement.line,
                                              statement.column) from err
    relations = []
    skeletons = []
    for statement in statements:
        if statement.keyword not in ("rel", "skeleton"):
            continue
        try:
            if statement.keyword == "rel":
                relations.append(_relation(statement.arguments[0],
                                           generators, kind))
            else:
                skeleton = _skeleton(statement.arguments[0],
                                     statement.arguments[1],
                                     generators, kind)
                skeletons.append(skeleton)
                if skeleton.flavor is SkeletonFlavor.PLANAR:
                    relations.extend(expand_planar_skeleton(skeleton))
                else:
                    relations.extend(expand_tree_skeleton(skeleton))
        except (ArityMismatchError, InvalidLabelingError,
                KindMismatchError, UnknownGeneratorError) as err:
            raise _position_error(err, statement) from err
    logger.debug(f"Parsed {len(generators)} generators and {len(relations)} relations.")
    return Presentation(kind, list(generators.values()), relations,
                        source_skeletons=skeletons, name=name)

def _relation(raw: Union[_RawLeaf, _RawNode],
              generators: Dict[str, Generator],
              kind: OperadKind) -> TreeMonomial:
    monomial = _to_monomial(raw, generators)
    if monomial.is_leaf():
        errstr = "The identity cannot be a relation!"
        raise InvalidLabelingError(errstr)
    if kind is OperadKind.NONSYM:
        return _as_nonsym(monomial)
    if any(label is None for label in monomial.leaf_labels()):
        errstr = (f"Shuffle relation {monomial.key} needs labelled leaves,"
                  " use a skeleton statement for placeholders!")
        raise InvalidLabelingError(errstr)
    return canonical_realization(monomial)

def _skeleton(flavor: str,
              raw: Union[_RawLeaf, _RawNode],
              generators: Dict[str, Generator],
              kind: OperadKind) -> Skeleton:
    if kind is not OperadKind.SHUFFLE:
        errstr = "Skeleton statements require a shuffle operad!"
        raise KindMismatchError(errstr)
    shape = _to_monomial(raw, generators)
    if any(label is not None for label in shape.leaf_labels()):
        errstr = f"The skeleton {shape.key} must only have placeholder leaves!"
        raise InvalidLabelingError(errstr)
    if shape.is_leaf():
        errstr = "The identity cannot be a relation!"
        raise InvalidLabelingError(errstr)
    return Skeleton(shape, SkeletonFlavor(flavor))
