from .truncated_series import *
from .operations import *
from .special_series import *
