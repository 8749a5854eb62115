from .eq_system import *
from .stump_closure import *
from .incl_excl import *
from .stump_systems import *
from .solver import *
from .emit import *
