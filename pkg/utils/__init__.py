from .errors import *
from .exactmath import *
from .siegel import *
from .ball import *
from .bounds import *
from .thresholds import *
from .oracle import *
from .extra import *
