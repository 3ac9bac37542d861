"""
dagiso engine
Decides whether a dependency model of independence statements has a dag explanation.
"""

__version__ = "1.0.0"
