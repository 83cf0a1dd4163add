"""Entry point for running sabar as a module."""

from sabar.cli import main

if __name__ == "__main__":
    main()
