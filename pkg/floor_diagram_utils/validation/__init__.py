from .sequences import *
from .polynomials import *
from .posets import *
from .floor_diagrams import *
from .templates import *
from .commands import *
