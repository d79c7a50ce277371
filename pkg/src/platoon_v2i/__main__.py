"""python -m platoon_v2i."""

import sys

from platoon_v2i.cli import main

sys.exit(main())
