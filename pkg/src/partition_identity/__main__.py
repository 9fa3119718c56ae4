import sys

from partition_identity.cli import main

sys.exit(main())
