"""Right-angled Artin groups, graph products of cyclic groups, and embeddings between them."""

from .graphs import *  # noqa: F401,F403
from .words import *  # noqa: F401,F403
from .conjugacy import *  # noqa: F401,F403
from .centralizers import *  # noqa: F401,F403
from .qm import *  # noqa: F401,F403
from .embed import *  # noqa: F401,F403

__version__ = "0.1.0"
