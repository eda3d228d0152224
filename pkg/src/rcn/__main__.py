import sys

from rcn.cli import main

sys.exit(main())
