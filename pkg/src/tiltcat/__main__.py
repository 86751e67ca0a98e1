import sys

from tiltcat.cli import main

sys.exit(main())
