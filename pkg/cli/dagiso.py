"""dagiso CLI main entry point."""

import click

from cli.commands.decide import decide
from cli.commands.oracle import oracle
from cli.commands.verify import verify


@click.group()
@click.version_option(version="1.0.0")
def main():
    """dagiso - decide whether an independence model has a dag explanation."""
    pass


main.add_command(decide)
main.add_command(verify)
main.add_command(oracle)


if __name__ == "__main__":
    main()
