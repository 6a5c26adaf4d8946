"""Support posets, path partitions and depolarization."""
