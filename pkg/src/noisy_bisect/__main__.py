import sys

from noisy_bisect.cli import main

sys.exit(main())
