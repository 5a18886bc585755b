import sys

from ktss.cli import main

sys.exit(main())
