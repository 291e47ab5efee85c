"""Entry point for running prahmlab as a module."""

from prahmlab.cli import main

if __name__ == "__main__":
    main()
