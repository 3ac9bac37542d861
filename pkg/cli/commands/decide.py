"""Decide command."""

import logging
from pathlib import Path

import click

from cli.run import EXIT_INPUT_ERROR, RunConfig, run
from engine.core.config import EMIT_FORMATS, PHASE2_MODES, EngineConfig
from engine.core.errors import ConfigError
from engine.util.fs import STDIN, safe_write


def configure_logging(verbose: int) -> None:
    """Log to stderr: INFO with -v, DEBUG with -vv."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s",
        )


@click.command()
@click.argument("input_path", metavar="[INPUT]", default=STDIN)
@click.option("--basis", is_flag=True, help="Treat statements as a basis and close them first")
@click.option("--mode", type=click.Choice(PHASE2_MODES), default=None, help="Phase 2 search mode")
@click.option("--emit", type=click.Choice(EMIT_FORMATS), default=None, help="Output format")
@click.option("--trace", is_flag=True, help="Include construction events")
@click.option("--check-oracle", is_flag=True, help="Cross-check with brute-force search (small universes)")
@click.option("--strict-separators/--first-separator", default=None,
              help="Require every separator of a pair to agree on each collider")
@click.option("--config", "config_path", default="dagiso.config.yaml", help="Configuration file")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write output to file")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (repeat for debug)")
@click.pass_context
def decide(ctx, input_path, basis, mode, emit, trace, check_oracle, strict_separators,
           config_path, output, verbose):
    """Decide whether the statements in INPUT (or stdin) have a dag explanation."""
    configure_logging(verbose)
    try:
        engine = EngineConfig.load(Path(config_path))
    except ConfigError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_INPUT_ERROR)

    config = RunConfig(
        input=input_path,
        basis_mode=basis,
        phase2_mode=mode,
        emit=emit,
        trace=trace,
        check_oracle=check_oracle,
        strict_separators=strict_separators,
        engine=engine,
    )
    result = run(config)

    if result.artifact:
        if output:
            safe_write(Path(output), result.artifact)
        else:
            click.echo(result.artifact, nl=False)
    if result.diagnostic:
        click.echo(result.diagnostic, err=True)
    ctx.exit(result.exit_code)
