import sys

from ratsign.cli import main

sys.exit(main())
