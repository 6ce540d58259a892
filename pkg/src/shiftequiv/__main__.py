import sys

from shiftequiv.cli import main

sys.exit(main())
