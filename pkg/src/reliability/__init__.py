"""Multi-state coherent system reliability."""
