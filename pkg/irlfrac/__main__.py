import sys
from irlfrac.cli import main

if __name__ == "__main__":
    sys.exit(main())
