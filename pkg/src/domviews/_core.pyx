# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reversible store and sparse-set integer domain.

Same contract as ``_pycore``; see that module for the semantics.
"""

from libc.stdlib cimport malloc, realloc, free

cdef enum:
    INIT_CAP = 64

cdef enum:
    NOCHANGE = 0
    CHANGED = 1
    WIPEOUT = -1


cdef class Trail:
    cdef long long *_vals
    cdef long long *_stamps
    cdef Py_ssize_t _nslots, _slot_cap
    cdef long long *_tr_slot
    cdef long long *_tr_old
    cdef long long *_tr_stamp
    cdef Py_ssize_t _ntrail, _trail_cap
    cdef list _frames
    cdef long long _stamp, _counter
    cdef public Py_ssize_t peak_entries

    def __cinit__(self):
        self._slot_cap = INIT_CAP
        self._trail_cap = INIT_CAP
        self._vals = <long long *>malloc(INIT_CAP * sizeof(long long))
        self._stamps = <long long *>malloc(INIT_CAP * sizeof(long long))
        self._tr_slot = <long long *>malloc(INIT_CAP * sizeof(long long))
        self._tr_old = <long long *>malloc(INIT_CAP * sizeof(long long))
        self._tr_stamp = <long long *>malloc(INIT_CAP * sizeof(long long))
        if (self._vals == NULL or self._stamps == NULL or self._tr_slot == NULL
                or self._tr_old == NULL or self._tr_stamp == NULL):
            raise MemoryError()
        self._nslots = 0
        self._ntrail = 0
        self._frames = []
        self._stamp = 0
        self._counter = 0
        self.peak_entries = 0

    def __dealloc__(self):
        free(self._vals)
        free(self._stamps)
        free(self._tr_slot)
        free(self._tr_old)
        free(self._tr_stamp)

    cpdef Py_ssize_t new_slot(self, long long value) except -1:
        cdef long long *p
        cdef long long *q
        if self._nslots == self._slot_cap:
            p = <long long *>realloc(self._vals, 2 * self._slot_cap * sizeof(long long))
            if p == NULL:
                raise MemoryError()
            self._vals = p
            q = <long long *>realloc(self._stamps, 2 * self._slot_cap * sizeof(long long))
            if q == NULL:
                raise MemoryError()
            self._stamps = q
            self._slot_cap *= 2
        self._vals[self._nslots] = value
        self._stamps[self._nslots] = 0
        self._nslots += 1
        return self._nslots - 1

    cpdef long long get(self, Py_ssize_t slot):
        return self._vals[slot]

    cdef int _grow_trail(self) except -1:
        cdef Py_ssize_t cap = 2 * self._trail_cap
        cdef long long *a = <long long *>realloc(self._tr_slot, cap * sizeof(long long))
        if a == NULL:
            raise MemoryError()
        self._tr_slot = a
        a = <long long *>realloc(self._tr_old, cap * sizeof(long long))
        if a == NULL:
            raise MemoryError()
        self._tr_old = a
        a = <long long *>realloc(self._tr_stamp, cap * sizeof(long long))
        if a == NULL:
            raise MemoryError()
        self._tr_stamp = a
        self._trail_cap = cap
        return 0

    cdef inline int _set(self, Py_ssize_t slot, long long value) except -1:
        cdef Py_ssize_t n
        if self._stamps[slot] != self._stamp:
            n = self._ntrail
            if n == self._trail_cap:
                self._grow_trail()
            self._tr_slot[n] = slot
            self._tr_old[n] = self._vals[slot]
            self._tr_stamp[n] = self._stamps[slot]
            self._stamps[slot] = self._stamp
            self._ntrail = n + 1
            if self._ntrail > self.peak_entries:
                self.peak_entries = self._ntrail
        self._vals[slot] = value
        return 0

    cpdef set(self, Py_ssize_t slot, long long value):
        self._set(slot, value)

    cpdef push(self):
        self._frames.append((self._ntrail, self._stamp))
        self._counter += 1
        self._stamp = self._counter

    cpdef pop(self):
        cdef Py_ssize_t mark, n, slot
        cdef long long stamp
        if not self._frames:
            raise RuntimeError("pop_frame with no open frame")
        mark, stamp = self._frames.pop()
        n = self._ntrail
        while n > mark:
            n -= 1
            slot = self._tr_slot[n]
            self._vals[slot] = self._tr_old[n]
            self._stamps[slot] = self._tr_stamp[n]
        self._ntrail = n
        self._stamp = stamp

    @property
    def depth(self):
        return len(self._frames)

    @property
    def num_slots(self):
        return self._nslots

    def __len__(self):
        return self._ntrail


cdef class IntDomain:
    cdef readonly Trail trail
    cdef readonly long long lo, hi
    cdef long long *_dense
    cdef long long *_sparse
    cdef Py_ssize_t _n
    cdef Py_ssize_t _size, _min, _max

    def __cinit__(self, Trail trail, long long lo, long long hi):
        cdef Py_ssize_t i
        if hi < lo:
            raise ValueError(f"empty universe [{lo}, {hi}]")
        self._n = <Py_ssize_t>(hi - lo + 1)
        self._dense = <long long *>malloc(self._n * sizeof(long long))
        self._sparse = <long long *>malloc(self._n * sizeof(long long))
        if self._dense == NULL or self._sparse == NULL:
            raise MemoryError()
        for i in range(self._n):
            self._dense[i] = i
            self._sparse[i] = i
        self.trail = trail
        self.lo = lo
        self.hi = hi
        self._size = trail.new_slot(self._n)
        self._min = trail.new_slot(lo)
        self._max = trail.new_slot(hi)

    def __dealloc__(self):
        free(self._dense)
        free(self._sparse)

    @property
    def universe_size(self):
        return self._n

    cpdef long long size(self):
        return self.trail._vals[self._size]

    cpdef long long min(self):
        return self.trail._vals[self._min]

    cpdef long long max(self):
        return self.trail._vals[self._max]

    cdef inline bint _member(self, long long v):
        if v < self.lo or v > self.hi:
            return False
        return self._sparse[v - self.lo] < self.trail._vals[self._size]

    cpdef bint member(self, long long v):
        return self._member(v)

    cpdef bint is_bound_to(self, long long v):
        cdef long long *vals = self.trail._vals
        return vals[self._size] == 1 and vals[self._min] == v

    cpdef list values(self):
        cdef long long *vals = self.trail._vals
        cdef long long size = vals[self._size]
        cdef long long v
        cdef list out = []
        for v in range(vals[self._min], vals[self._max] + 1):
            if self._sparse[v - self.lo] < size:
                out.append(v)
        return out

    cdef inline int _drop(self, long long o, long long size) except -1:
        cdef long long pos = self._sparse[o]
        cdef long long last = size - 1
        cdef long long other = self._dense[last]
        self._dense[pos] = other
        self._sparse[other] = pos
        self._dense[last] = o
        self._sparse[o] = last
        self.trail._set(self._size, last)
        return 0

    cpdef int remove(self, long long v) except? -2:
        cdef Trail trail = self.trail
        cdef long long size, w
        if not self._member(v):
            return NOCHANGE
        size = trail._vals[self._size]
        if size == 1:
            return WIPEOUT
        self._drop(v - self.lo, size)
        size -= 1
        if v == trail._vals[self._min]:
            w = v + 1
            while self._sparse[w - self.lo] >= size:
                w += 1
            trail._set(self._min, w)
        elif v == trail._vals[self._max]:
            w = v - 1
            while self._sparse[w - self.lo] >= size:
                w -= 1
            trail._set(self._max, w)
        return CHANGED

    cpdef tuple bind(self, long long v):
        cdef long long o, pos, other
        cdef list removed
        if not self._member(v):
            return WIPEOUT, []
        removed = [w for w in self.values() if w != v]
        if removed:
            o = v - self.lo
            pos = self._sparse[o]
            other = self._dense[0]
            self._dense[pos] = other
            self._sparse[other] = pos
            self._dense[0] = o
            self._sparse[o] = 0
            self.trail._set(self._size, 1)
            self.trail._set(self._min, v)
            self.trail._set(self._max, v)
        return CHANGED, removed

    cpdef tuple update_min(self, long long v):
        cdef long long lo = self.min()
        cdef long long size, w
        cdef list removed = []
        if v <= lo:
            return NOCHANGE, removed
        if v > self.max():
            return WIPEOUT, removed
        size = self.size()
        for w in range(lo, v):
            if self._sparse[w - self.lo] < size:
                removed.append(w)
        for w in removed:
            self._drop(w - self.lo, size)
            size -= 1
        w = v
        while self._sparse[w - self.lo] >= size:
            w += 1
        self.trail._set(self._min, w)
        return CHANGED, removed

    cpdef tuple update_max(self, long long v):
        cdef long long hi = self.max()
        cdef long long size, w
        cdef list removed = []
        if v >= hi:
            return NOCHANGE, removed
        if v < self.min():
            return WIPEOUT, removed
        size = self.size()
        for w in range(v + 1, hi + 1):
            if self._sparse[w - self.lo] < size:
                removed.append(w)
        for w in removed:
            self._drop(w - self.lo, size)
            size -= 1
        w = v
        while self._sparse[w - self.lo] >= size:
            w -= 1
        self.trail._set(self._max, w)
        return CHANGED, removed

    def __repr__(self):
        return f"IntDomain({self.values()})"
