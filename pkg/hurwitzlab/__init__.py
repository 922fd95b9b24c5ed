from .exceptions import *  # noqa
from .validators import *  # noqa
from .fields import *  # noqa
from .objects import *  # noqa
from .lattice import *  # noqa
from .rootsys import *  # noqa
from .weyl import *  # noqa
from .hurwitz import *  # noqa
from .congruence import *  # noqa
from .elliptic import *  # noqa
from .schemas import *  # noqa
from .appendix import *  # noqa
from .poset import *  # noqa

__version__ = '0.1.0'
