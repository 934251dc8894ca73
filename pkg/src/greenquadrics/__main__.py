import sys

from greenquadrics.cli import main

if __name__ == "__main__":
    sys.exit(main())
