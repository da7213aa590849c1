__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.cli import main


if __name__ == "__main__":
    main()
