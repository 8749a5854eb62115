from .opgen_exceptions import *
from .util import *
from .monomials import *
from .presentation import *
from .series import *
from .enumeration import *
from .eqsys import *
from .analysis import *
from .random_presentations import *
