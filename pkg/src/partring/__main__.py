import sys

from partring.cli import main

sys.exit(main())
