import sys

from mixcayley.cli import main

sys.exit(main())
