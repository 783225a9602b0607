from .bijection import *
from .cli import *
from .constants import *
from .couplings import *
from .determinants import *
from .figures import *
from .formulas import *
from .fpl import *
from .regions import *
from .reports import *
from .stationary import *
