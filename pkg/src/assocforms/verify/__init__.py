"""Identity suite and command-line interface."""
