import sys

from namecensus.cli import main

sys.exit(main())
