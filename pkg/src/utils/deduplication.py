"""Visited-state bookkeeping for the configuration-graph search."""

import threading
from typing import Hashable, Set

from .logger import get_logger


logger = get_logger(__name__)


class StateDeduplicator:
    """Set of visited search keys with atomic insert-if-absent."""

    def __init__(self, capacity: int):
        """
        Initialize the deduplicator.

        Args:
            capacity: Maximum number of keys to remember
        """
        self.capacity = capacity
        self.seen: Set[Hashable] = set()
        self.duplicate_hits = 0
        self.rejected = 0
        self._lock = threading.Lock()

    def add_if_absent(self, key: Hashable) -> bool:
        """
        Record a key unless it is already known or the store is full.

        Args:
            key: Search key to record

        Returns:
            True if the key was new and stored, False otherwise
        """
        with self._lock:
            if key in self.seen:
                self.duplicate_hits += 1
                return False
            if len(self.seen) >= self.capacity:
                self.rejected += 1
                return False
            self.seen.add(key)
            return True

    def is_duplicate(self, key: Hashable) -> bool:
        """Check whether a key was already recorded."""
        return key in self.seen

    @property
    def full(self) -> bool:
        """True once the capacity has been reached."""
        return len(self.seen) >= self.capacity

    def get_stats(self) -> dict:
        """
        Get deduplication statistics.

        Returns:
            Dictionary with stats
        """
        stats = {
            'states': len(self.seen),
            'duplicate_hits': self.duplicate_hits,
            'rejected': self.rejected,
        }
        logger.debug(f"Deduplication stats: {stats}")
        return stats
