"""
Bucket queue for batch peeling.

Only a window of `window` consecutive buckets [low, low + window) is
materialized; vertices with larger keys wait in an overflow map and are
pulled in when the window runs dry. Keys may drop below `low` (peeling
decrements counts); the window then slides down and the buckets falling
off its top move to the overflow.
"""

from config import BUCKET_WINDOW


class BucketQueue:
    def __init__(self, keys, window=BUCKET_WINDOW):
        if window < 1:
            raise ValueError("window must hold at least one bucket")
        self.window = window
        self.key = {}
        self.overflow = {}
        self.buckets = [set() for _ in range(window)]
        keys = [int(x) for x in keys]
        self.low = min(keys) if keys else 0
        for v, key in enumerate(keys):
            self._place(v, key)

    def __len__(self):
        return len(self.key)

    def __contains__(self, v):
        return v in self.key

    @property
    def current_value(self):
        return self.low

    def value_of(self, v):
        return self.key[v]

    def update(self, v, key):
        key = int(key)
        if self.key[v] == key:
            return
        self._remove(v)
        self._place(v, key)

    def extract_min(self):
        """Remove and return (key, ascending vertex list) of the minimum bucket"""
        if not self.key:
            raise IndexError("extract from an empty bucket queue")
        position = self._first_filled()
        if position is None:
            self._refill()
            position = self._first_filled()
        bucket = self.buckets[position]
        vertices = sorted(bucket)
        bucket.clear()
        for v in vertices:
            del self.key[v]
        return self.low + position, vertices

    def _first_filled(self):
        for i, bucket in enumerate(self.buckets):
            if bucket:
                return i
        return None

    def _place(self, v, key):
        if key < self.low:
            self._slide_down(key)
        self.key[v] = key
        if key < self.low + self.window:
            self.buckets[key - self.low].add(v)
        else:
            self.overflow[v] = key

    def _remove(self, v):
        key = self.key.pop(v)
        if key < self.low + self.window:
            self.buckets[key - self.low].discard(v)
        else:
            del self.overflow[v]

    def _slide_down(self, new_low):
        shift = self.low - new_low
        keep = max(0, self.window - shift)
        for offset, bucket in enumerate(self.buckets[keep:], start=keep):
            for v in bucket:
                self.overflow[v] = self.low + offset
        self.buckets = [set() for _ in range(self.window - keep)] + self.buckets[:keep]
        self.low = new_low

    def _refill(self):
        """Re-anchor the empty window at the smallest overflow key"""
        self.low = min(self.overflow.values())
        limit = self.low + self.window
        moved = [(v, key) for v, key in self.overflow.items() if key < limit]
        for v, key in moved:
            del self.overflow[v]
            self.buckets[key - self.low].add(v)
