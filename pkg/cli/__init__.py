"""CLI interface: click commands over the decision pipeline."""
