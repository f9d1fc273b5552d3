"""Cache of compiled subproblems keyed by context. Entries are (node reference, value), value None for failures"""

from collections import defaultdict

from .context import ContextKey


class Cache:
    def __init__(self):
        self.entries: dict[ContextKey, tuple] = {}
        self.hits = 0
        self.misses = 0
        self.hits_by_variable: dict[int, int] = defaultdict(int)

    def __len__(self):
        return len(self.entries)

    def lookup(self, key: ContextKey) -> tuple:
        entry = self.entries.get(key)
        if entry is None:
            self.misses += 1
        else:
            self.hits += 1
            self.hits_by_variable[key.next_var] += 1
        return entry

    def store(self, key: ContextKey, entry: tuple):
        """Stores entry under key. A key keeps the first entry stored for it

        Args:
            key (ContextKey): The context
            entry (tuple): (node reference, value)
        """
        if key not in self.entries:
            self.entries[key] = entry


def cache_report(cache: Cache) -> dict:
    lookups = cache.hits + cache.misses
    return {
        "entries": len(cache),
        "hits": cache.hits,
        "misses": cache.misses,
        "hit_rate": cache.hits / lookups if lookups else 0.0,
    }
