import sys

from qptlab.cli.main import main

sys.exit(main())
