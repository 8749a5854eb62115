from .generator import *
from .tree_monomial import *
from .divisibility import *
from .skeleton import *
