"""Pure-Python reversible store and sparse-set integer domain.

This module mirrors ``_core.pyx`` line for line and is used whenever the
compiled extension is unavailable (or when asked for explicitly).
"""

from __future__ import annotations

NOCHANGE = 0
CHANGED = 1
WIPEOUT = -1


class Trail:
    """Reversible integer slots with frame-based undo.

    Every slot write inside a frame saves the old word once per frame
    (timestamped), so popping a frame restores all slots in reverse order.
    Writes made with no open frame are permanent.
    """

    def __init__(self) -> None:
        self.vals: list[int] = []
        self.stamps: list[int] = []
        self._entries: list[tuple[int, int, int]] = []
        self._frames: list[tuple[int, int]] = []
        self._stamp = 0
        self._counter = 0
        self.peak_entries = 0

    def new_slot(self, value: int) -> int:
        self.vals.append(value)
        self.stamps.append(0)
        return len(self.vals) - 1

    def get(self, slot: int) -> int:
        return self.vals[slot]

    def set(self, slot: int, value: int) -> None:
        if self.stamps[slot] != self._stamp:
            self._entries.append((slot, self.vals[slot], self.stamps[slot]))
            self.stamps[slot] = self._stamp
            if len(self._entries) > self.peak_entries:
                self.peak_entries = len(self._entries)
        self.vals[slot] = value

    def push(self) -> None:
        self._frames.append((len(self._entries), self._stamp))
        self._counter += 1
        self._stamp = self._counter

    def pop(self) -> None:
        if not self._frames:
            raise RuntimeError("pop_frame with no open frame")
        mark, stamp = self._frames.pop()
        entries = self._entries
        vals, stamps = self.vals, self.stamps
        while len(entries) > mark:
            slot, old, old_stamp = entries.pop()
            vals[slot] = old
            stamps[slot] = old_stamp
        self._stamp = stamp

    @property
    def depth(self) -> int:
        return len(self._frames)

    @property
    def num_slots(self) -> int:
        return len(self.vals)

    def __len__(self) -> int:
        return len(self._entries)


class IntDomain:
    """Sparse set over the inclusive universe ``[lo, hi]``.

    Size, min and max live in trail slots; the dense/sparse arrays are only
    permuted, which the reversible size makes safe to undo.  A removal that
    would empty the set reports ``WIPEOUT`` and leaves the set untouched.
    """

    def __init__(self, trail: Trail, lo: int, hi: int) -> None:
        if hi < lo:
            raise ValueError(f"empty universe [{lo}, {hi}]")
        n = hi - lo + 1
        self.trail = trail
        self.lo = lo
        self.hi = hi
        self.dense = list(range(n))
        self.sparse = list(range(n))
        self._size = trail.new_slot(n)
        self._min = trail.new_slot(lo)
        self._max = trail.new_slot(hi)

    @property
    def universe_size(self) -> int:
        return self.hi - self.lo + 1

    def size(self) -> int:
        return self.trail.vals[self._size]

    def min(self) -> int:
        return self.trail.vals[self._min]

    def max(self) -> int:
        return self.trail.vals[self._max]

    def member(self, v: int) -> bool:
        o = v - self.lo
        if o < 0 or v > self.hi:
            return False
        return self.sparse[o] < self.trail.vals[self._size]

    def is_bound_to(self, v: int) -> bool:
        vals = self.trail.vals
        return vals[self._size] == 1 and vals[self._min] == v

    def values(self) -> list[int]:
        vals = self.trail.vals
        size = vals[self._size]
        lo = self.lo
        sparse = self.sparse
        return [v for v in range(vals[self._min], vals[self._max] + 1) if sparse[v - lo] < size]

    def _drop(self, o: int, size: int) -> None:
        # swap offset o to position size-1 and shrink
        dense, sparse = self.dense, self.sparse
        pos = sparse[o]
        last = size - 1
        other = dense[last]
        dense[pos] = other
        sparse[other] = pos
        dense[last] = o
        sparse[o] = last
        self.trail.set(self._size, last)

    def remove(self, v: int) -> int:
        if not self.member(v):
            return NOCHANGE
        trail = self.trail
        size = trail.vals[self._size]
        if size == 1:
            return WIPEOUT
        self._drop(v - self.lo, size)
        lo, sparse = self.lo, self.sparse
        size -= 1
        if v == trail.vals[self._min]:
            w = v + 1
            while sparse[w - lo] >= size:
                w += 1
            trail.set(self._min, w)
        elif v == trail.vals[self._max]:
            w = v - 1
            while sparse[w - lo] >= size:
                w -= 1
            trail.set(self._max, w)
        return CHANGED

    def bind(self, v: int) -> tuple[int, list[int]]:
        if not self.member(v):
            return WIPEOUT, []
        removed = [w for w in self.values() if w != v]
        if removed:
            o = v - self.lo
            pos = self.sparse[o]
            dense, sparse = self.dense, self.sparse
            other = dense[0]
            dense[pos] = other
            sparse[other] = pos
            dense[0] = o
            sparse[o] = 0
            trail = self.trail
            trail.set(self._size, 1)
            trail.set(self._min, v)
            trail.set(self._max, v)
        return CHANGED, removed

    def update_min(self, v: int) -> tuple[int, list[int]]:
        if v <= self.min():
            return NOCHANGE, []
        if v > self.max():
            return WIPEOUT, []
        removed = [w for w in range(self.min(), v) if self.member(w)]
        size = self.size()
        for w in removed:
            self._drop(w - self.lo, size)
            size -= 1
        w = v
        while self.sparse[w - self.lo] >= size:
            w += 1
        self.trail.set(self._min, w)
        return CHANGED, removed

    def update_max(self, v: int) -> tuple[int, list[int]]:
        if v >= self.max():
            return NOCHANGE, []
        if v < self.min():
            return WIPEOUT, []
        removed = [w for w in range(v + 1, self.max() + 1) if self.member(w)]
        size = self.size()
        for w in removed:
            self._drop(w - self.lo, size)
            size -= 1
        w = v
        while self.sparse[w - self.lo] >= size:
            w -= 1
        self.trail.set(self._max, w)
        return CHANGED, removed

    def __repr__(self) -> str:
        return f"IntDomain({self.values()})"
