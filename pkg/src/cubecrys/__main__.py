import sys

from cubecrys.cli import main

if __name__ == "__main__":
    sys.exit(main())
