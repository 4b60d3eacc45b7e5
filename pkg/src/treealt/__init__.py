"""treealt: decide and certify the power alternative for groups acting on trees."""

__version__ = "0.1.0"
