from .rational_guess import *
from .algebraic_guess import *
from .dependence_graph import *
