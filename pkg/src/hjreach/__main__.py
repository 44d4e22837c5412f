import sys

from hjreach.cli import main

sys.exit(main())
