"""Verify command."""

from pathlib import Path

import click

from report.verify import verify_record


@click.command()
@click.option("--report", required=True, type=click.Path(exists=True), help="Decision record path")
def verify(report: str):
    """Verify a saved decision record."""
    record_path = Path(report)

    click.echo(f"Verifying record: {record_path}")

    results = verify_record(record_path)

    if results["valid"]:
        click.echo("✓ Record is valid")
    else:
        click.echo("✗ Record is invalid")
        click.echo("\nErrors:")
        for error in results["errors"]:
            click.echo(f"  - {error}")
        raise click.exceptions.Exit(1)
