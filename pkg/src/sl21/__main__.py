import sys

from sl21.cli import main

sys.exit(main())
