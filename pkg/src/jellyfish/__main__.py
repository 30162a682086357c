"""Allow ``python3 -m jellyfish``."""

import sys

from .cli import main

sys.exit(main())
