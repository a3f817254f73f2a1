"""Allow `python -m wpsurf ...`."""

import sys

from .cli import main

sys.exit(main())
