"""
A catalog of ready-made presentations.

assoc: associative operad, relation (ab)c.
asw: the operad with relations ((ab)c)d and a(b((cd)e)).
q_k(K): the operad whose only relation is the leading term of the
    K-ary relation a_1(a_2(...(a_{K-1}a_K)...)), written as the path
    going K-2 times to the right and then once to the left.
alia: anti-Lie-admissible type operad with relation beta(x1,alpha(x2,x3)).
nu2, nu3: operads defined by all monomials of certain tree skeletons.
lieadm: monomial model of the Lie-admissible operad.
free_binary, free_shuffle_binary: free operads on one binary generator.
"""
from __future__ import annotations
import re
from functools import lru_cache
from typing import Dict

from .parser import parse_presentation
from .presentation import Presentation
from ..opgen_exceptions import UnknownPresentationError

_SOURCES = {
    "assoc": """
        operad nonsym
        gen mu : 2
        rel mu(mu(-,-),-)
        """,
    "asw": """
        operad nonsym
        gen mu : 2
        rel mu(mu(mu(-,-),-),-)
        rel mu(-,mu(-,mu(mu(-,-),-)))
        """,
    "alia": """
        operad shuffle
        gen alpha : 2
        gen beta : 2
        rel beta(x1,alpha(x2,x3))
        """,
    "nu2": """
        operad shuffle
        gen mu : 2
        gen alpha : 2
        skeleton tree mu(alpha(-,-),alpha(-,-))
        skeleton tree alpha(alpha(-,-),alpha(-,-))
        """,
    "nu3": """
        operad shuffle
        gen alpha : 2
        gen beta : 2
        skeleton tree alpha(alpha(alpha(-,-),alpha(-,-)),alpha(-,-))
        skeleton tree alpha(beta(alpha(-,-),alpha(-,-)),alpha(-,-))
        skeleton tree beta(alpha(alpha(-,-),alpha(-,-)),alpha(-,-))
        skeleton tree beta(beta(alpha(-,-),alpha(-,-)),alpha(-,-))
        """,
    "lieadm": """
        operad shuffle
        gen alpha : 2
        gen beta : 2
        rel alpha(x1,alpha(x2,x3))
        skeleton planar beta(alpha(-,-),alpha(-,-))
        """,
    "free_binary": """
        operad nonsym
        gen mu : 2
        """,
    "free_shuffle_binary": """
        operad shuffle
        gen mu : 2
        """,
}

_QK_PATTERN = re.compile(r"q_k(?:\((\d+)\)|:(\d+))\Z")

def q_k_source(k: int) -> str:
    """
    The source of the presentation q_k(k).
    """
    if k < 2:
        errstr = f"q_k needs k >= 2, not {k}!"
        raise ValueError(errstr)
    relation = "mu(mu(-,-),-)"
    for _ in range(k - 2):
        relation = f"mu(-,{relation})"
    return f"operad nonsym\ngen mu : 2\nrel {relation}\n"

@lru_cache(maxsize=None)
def get_builtin(name: str) -> Presentation:
    """
    Looks up a built-in presentation.

    Args:
        name (str): One of the catalog names, or `q_k(K)` / `q_k:K` for an
            integer K >= 2.

    Raises:
        UnknownPresentationError: If the name is not known.
    """
    match = _QK_PATTERN.match(name)
    if match is not None:
        k = int(match.group(1) or match.group(2))
        return parse_presentation(q_k_source(k), name=f"q_k({k})")
    if name not in _SOURCES:
        errstr = (f"Unknown presentation {name!r}, known are "
                  f"{', '.join(sorted(_SOURCES))} and q_k(K)!")
        raise UnknownPresentationError(errstr)
    return parse_presentation(_SOURCES[name], name=name)

def builtin_presentations() -> Dict[str, Presentation]:
    """
    The catalog of built-in presentations, with q_k represented by q_k(3).
    """
    names = ["assoc", "asw", "q_k(3)", "alia", "nu2", "nu3", "lieadm",
             "free_binary", "free_shuffle_binary"]
    return {name: get_builtin(name) for name in names}
