import sys

from sracah.cli import main

sys.exit(main())
