import sys

from distinct_triangles.cli import main

sys.exit(main())
