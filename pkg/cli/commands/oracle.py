"""Oracle command."""

from pathlib import Path

import click

from engine.core.config import EngineConfig
from engine.core.errors import ConfigError, TooLarge
from engine.oracle.classes import equivalence_classes
from engine.oracle.enumerate import enumerate_dags, labeled_dag_count


@click.command()
@click.option("--nodes", "n", required=True, type=click.IntRange(min=0), help="Node count")
@click.option("--config", "config_path", default="dagiso.config.yaml", help="Configuration file")
def oracle(n: int, config_path: str):
    """Count labeled dags and equivalence classes on N nodes."""
    try:
        cap = EngineConfig.load(Path(config_path)).enumeration_cap
        space = enumerate_dags(n, cap=cap)
        classes = equivalence_classes(n, cap=cap)
    except (ConfigError, TooLarge) as e:
        click.echo(f"error: {e}", err=True)
        raise click.exceptions.Exit(2)

    click.echo(f"nodes: {n}")
    click.echo(f"labeled dags (enumerated): {len(space)}")
    click.echo(f"labeled dags (recurrence): {labeled_dag_count(n)}")
    click.echo(f"equivalence classes: {len(classes)}")
