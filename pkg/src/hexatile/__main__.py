import sys

from hexatile.cli import main

sys.exit(main())
