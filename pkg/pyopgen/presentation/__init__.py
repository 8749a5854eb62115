from .presentation import *
from .regularity import *
from .parser import *
from .builtins import *
