import sys

from ltsig.cli import main

sys.exit(main())
