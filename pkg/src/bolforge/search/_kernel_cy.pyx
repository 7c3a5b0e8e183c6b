# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for normalized Cayley-table search.

Twin of ``_kernel_py``; the two must stay in lockstep and produce
identical output for identical arguments.  See the Python module for
the algorithm documentation.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

from itertools import permutations

BACKEND = "cython"

EMPTY = 255

CONSTRAINT_NONE = 0
CONSTRAINT_LEFT_BOL = 1
CONSTRAINT_RIGHT_BOL = 2
CONSTRAINT_MOUFANG = 3
CONSTRAINT_ASSOC = 4

DEF C_EMPTY = 255
DEF MAXN = 12

_PERM_CACHE = {}


cdef double _monotonic() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


def _perm_blob(int n):
    """(blob, group starts, group counts): identity-fixing non-identity perms.

    Each record is 2n bytes (the permutation then its inverse); records
    are grouped by inverse[1], the source row of image row 1.
    """
    cached = _PERM_CACHE.get(n)
    if cached is not None:
        return cached
    groups = [[] for _ in range(n)]
    ident = tuple(range(n))
    for tail in permutations(range(1, n)):
        perm = (0,) + tail
        if perm == ident:
            continue
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        groups[inv[1]].append((perm, tuple(inv)))
    blob = bytearray()
    starts = []
    counts = []
    rec = 0
    for k in range(n):
        starts.append(rec)
        counts.append(len(groups[k]))
        for perm, inv in groups[k]:
            blob.extend(perm)
            blob.extend(inv)
            rec += 1
    out = (bytes(blob), tuple(starts), tuple(counts))
    _PERM_CACHE[n] = out
    return out


cdef class _Search:
    cdef int n, constraint, iso_rows, ncells, start_idx
    cdef bint find_mode, debug_leaf, prefix_only, found, exhausted
    cdef long long node_budget, nodes, latin_prunes, identity_prunes
    cdef long long iso_prunes, leaves, canonical
    cdef double deadline
    cdef unsigned char T[MAXN * MAXN]
    cdef unsigned int row_used[MAXN]
    cdef unsigned int col_used[MAXN]
    cdef unsigned int full_mask
    cdef object leaf_cb
    cdef list tables
    cdef bytes pblob
    cdef const unsigned char *perms
    cdef int pstart[MAXN]
    cdef int pcount[MAXN]

    def __init__(self, int n, int constraint, prefix=None, bint find_mode=False,
                 leaf_cb=None, long long node_budget=10**8, double deadline=0.0,
                 int iso_rows=-1, bint debug_leaf=False, bint prefix_only=False):
        if n < 1 or n > MAXN - 2:
            raise ValueError(f"kernel supports orders 1..{MAXN - 2}, got {n}")
        cdef int i, j, r, c, v
        self.n = n
        self.constraint = constraint
        self.find_mode = find_mode
        self.leaf_cb = leaf_cb
        self.node_budget = node_budget
        self.deadline = deadline
        self.iso_rows = iso_rows
        self.debug_leaf = debug_leaf
        self.prefix_only = prefix_only

        for i in range(n * n):
            self.T[i] = C_EMPTY
        for j in range(n):
            self.T[j] = j
            self.T[j * n] = j
        self.full_mask = (1u << n) - 1
        self.row_used[0] = self.full_mask
        self.col_used[0] = self.full_mask
        for i in range(1, n):
            self.row_used[i] = 1u << i
            self.col_used[i] = 1u << i

        self.ncells = (n - 1) if prefix_only else (n - 1) * (n - 1)
        self.start_idx = 0
        if prefix is not None:
            for i, v in enumerate(prefix):
                r = 1 + i // (n - 1)
                c = 1 + i % (n - 1)
                self.T[r * n + c] = v
                self.row_used[r] |= 1u << v
                self.col_used[c] |= 1u << v
            self.start_idx = len(prefix)

        blob, starts, counts = _perm_blob(n)
        self.pblob = blob
        self.perms = self.pblob
        for i in range(n):
            self.pstart[i] = starts[i]
            self.pcount[i] = counts[i]

        self.tables = []
        self.found = False
        self.nodes = 0
        self.latin_prunes = 0
        self.identity_prunes = 0
        self.iso_prunes = 0
        self.leaves = 0
        self.canonical = 0
        self.exhausted = True

    # -- identity instance scans ------------------------------------------

    cdef bint _check_left_bol(self) noexcept nogil:
        cdef int n = self.n
        cdef int x, y, z, xn, yn
        cdef unsigned char t1, u1, t2, u2, lhs, rhs
        for x in range(1, n):
            xn = x * n
            for z in range(1, n):
                t1 = self.T[xn + z]
                if t1 == C_EMPTY:
                    continue
                for y in range(n):
                    yn = y * n
                    u1 = self.T[yn + x]
                    if u1 == C_EMPTY:
                        continue
                    t2 = self.T[yn + t1]
                    if t2 == C_EMPTY:
                        continue
                    u2 = self.T[xn + u1]
                    if u2 == C_EMPTY:
                        continue
                    lhs = self.T[xn + t2]
                    if lhs == C_EMPTY:
                        continue
                    rhs = self.T[u2 * n + z]
                    if rhs == C_EMPTY:
                        continue
                    if lhs != rhs:
                        return False
        return True

    cdef bint _check_right_bol(self) noexcept nogil:
        cdef int n = self.n
        cdef int x, y, z, xn, zn
        cdef unsigned char t1, u1, t2, u2, lhs, rhs
        for x in range(1, n):
            xn = x * n
            for y in range(n):
                u1 = self.T[xn + y]
                if u1 == C_EMPTY:
                    continue
                u2 = self.T[u1 * n + x]
                if u2 == C_EMPTY:
                    continue
                for z in range(1, n):
                    zn = z * n
                    t1 = self.T[zn + x]
                    if t1 == C_EMPTY:
                        continue
                    t2 = self.T[t1 * n + y]
                    if t2 == C_EMPTY:
                        continue
                    lhs = self.T[t2 * n + x]
                    if lhs == C_EMPTY:
                        continue
                    rhs = self.T[zn + u2]
                    if rhs == C_EMPTY:
                        continue
                    if lhs != rhs:
                        return False
        return True

    cdef bint _check_assoc(self) noexcept nogil:
        cdef int n = self.n
        cdef int x, y, z, xn, yn, t1n
        cdef unsigned char t1, u1, lhs, rhs
        for x in range(1, n):
            xn = x * n
            for y in range(1, n):
                yn = y * n
                t1 = self.T[xn + y]
                if t1 == C_EMPTY:
                    continue
                t1n = t1 * n
                for z in range(1, n):
                    lhs = self.T[t1n + z]
                    if lhs == C_EMPTY:
                        continue
                    u1 = self.T[yn + z]
                    if u1 == C_EMPTY:
                        continue
                    rhs = self.T[xn + u1]
                    if rhs == C_EMPTY:
                        continue
                    if lhs != rhs:
                        return False
        return True

    cdef bint _identity_ok(self) noexcept nogil:
        cdef int c = self.constraint
        if c == 0:
            return True
        if c == 1:
            return self._check_left_bol()
        if c == 2:
            return self._check_right_bol()
        if c == 3:
            return self._check_left_bol() and self._check_right_bol()
        return self._check_assoc()

    # -- minimality rejection -----------------------------------------------

    cdef bint _image_smaller(self, const unsigned char *perm,
                             const unsigned char *inv) noexcept nogil:
        cdef int n = self.n
        cdef int i, j, row, src
        cdef unsigned char pv, qsrc, qv
        for i in range(1, n):
            row = i * n
            src = inv[i] * n
            for j in range(1, n):
                pv = self.T[row + j]
                if pv == C_EMPTY:
                    return False
                qsrc = self.T[src + inv[j]]
                if qsrc == C_EMPTY:
                    return False
                qv = perm[qsrc]
                if qv != pv:
                    return qv < pv
        return False

    cdef bint _min_reject(self, int rows_filled) noexcept nogil:
        cdef int n = self.n
        cdef int k, r
        cdef const unsigned char *rec
        for k in range(1, rows_filled + 1):
            rec = self.perms + self.pstart[k] * 2 * n
            for r in range(self.pcount[k]):
                if self._image_smaller(rec, rec + n):
                    return True
                rec += 2 * n
        return False

    # -- leaves ----------------------------------------------------------------

    cdef int _leaf(self):
        cdef int n = self.n
        if self.prefix_only:
            self.tables.append(
                PyBytes_FromStringAndSize(<const char *> &self.T[n + 1], n - 1)
            )
            return 0
        self.leaves += 1
        if self.debug_leaf and not self._identity_ok():
            raise RuntimeError("incremental identity check missed a violation")
        if self._min_reject(n - 1):
            return 0
        self.canonical += 1
        tb = PyBytes_FromStringAndSize(<const char *> self.T, n * n)
        if self.find_mode:
            if self.leaf_cb(tb):
                self.tables.append(tb)
                self.found = True
                return 1
            return 0
        self.tables.append(tb)
        return 0

    # -- depth-first fill ---------------------------------------------------------

    cdef int _dfs(self, int idx) except -1:
        if idx == self.ncells:
            return self._leaf()
        cdef int n = self.n
        cdef int r = 1 + idx // (n - 1)
        cdef int c = 1 + idx % (n - 1)
        cdef int pos = r * n + c
        cdef unsigned int avail = self.full_mask & ~(self.row_used[r] | self.col_used[c])
        cdef unsigned int bit, m
        cdef int v, rc, popcnt
        popcnt = 0
        m = avail
        while m:
            m &= m - 1
            popcnt += 1
        self.latin_prunes += n - popcnt
        cdef bint boundary = (
            c == n - 1 and r < n - 1 and (self.iso_rows < 0 or r <= self.iso_rows)
        )
        while avail:
            bit = avail & (~avail + 1u)
            avail ^= bit
            v = 0
            m = bit
            while m > 1u:
                m >>= 1
                v += 1
            self.nodes += 1
            if self.nodes >= self.node_budget:
                self.exhausted = False
                return 2
            if self.deadline != 0.0 and self.nodes % 1024 == 0 and _monotonic() > self.deadline:
                self.exhausted = False
                return 2
            self.T[pos] = v
            self.row_used[r] |= bit
            self.col_used[c] |= bit
            if self._identity_ok():
                if boundary and self._min_reject(r):
                    self.iso_prunes += 1
                else:
                    rc = self._dfs(idx + 1)
                    if rc:
                        return rc
            else:
                self.identity_prunes += 1
            self.T[pos] = C_EMPTY
            self.row_used[r] ^= bit
            self.col_used[c] ^= bit
        return 0

    def run(self):
        rc = self._dfs(self.start_idx)
        if rc == 1:
            self.exhausted = False
        return {
            "tables": self.tables,
            "found": self.found,
            "nodes": self.nodes,
            "latin_prunes": self.latin_prunes,
            "identity_prunes": self.identity_prunes,
            "iso_prunes": self.iso_prunes,
            "leaves": self.leaves,
            "canonical": self.canonical,
            "exhausted": self.exhausted,
        }


def run(int n, int constraint, prefix=None, bint find_mode=False, leaf_cb=None,
        long long node_budget=10**8, double deadline=0.0, int iso_rows=-1,
        bint debug_leaf=False):
    """Search the (sub)tree of normalized order-n tables; see _kernel_py docs."""
    search = _Search(
        n, constraint, prefix=prefix, find_mode=find_mode, leaf_cb=leaf_cb,
        node_budget=node_budget, deadline=deadline, iso_rows=iso_rows,
        debug_leaf=debug_leaf,
    )
    return search.run()


def collect_prefixes(int n, int constraint, long long node_budget=10**8,
                     double deadline=0.0, int iso_rows=-1):
    """Enumerate valid completions of row 1, the per-subtree split points."""
    search = _Search(
        n, constraint, node_budget=node_budget, deadline=deadline,
        iso_rows=iso_rows, prefix_only=True,
    )
    return search.run()


def canonical_form_bytes(bytes flat, int n):
    """Lex-least relabeling of a full normalized table, fixing element 0."""
    if n < 1 or n > MAXN - 2:
        raise ValueError(f"kernel supports orders 1..{MAXN - 2}, got {n}")
    if len(flat) != n * n:
        raise ValueError("flat table has wrong size")
    blob, starts, counts = _perm_blob(n)
    cdef const unsigned char *perms = blob
    cdef const unsigned char *src = flat
    cdef unsigned char best[MAXN * MAXN]
    cdef unsigned char cand[MAXN * MAXN]
    cdef int i, j, k, r, row, srow, total
    cdef bint smaller, done
    cdef const unsigned char *perm
    cdef const unsigned char *inv
    for i in range(n * n):
        best[i] = src[i]
    total = 0
    for k in range(n):
        total += counts[k]
    cdef const unsigned char *rec = perms
    for r in range(total):
        perm = rec
        inv = rec + n
        rec += 2 * n
        smaller = False
        done = False
        for i in range(1, n):
            row = i * n
            srow = inv[i] * n
            for j in range(1, n):
                if perm[src[srow + inv[j]]] != best[row + j]:
                    smaller = perm[src[srow + inv[j]]] < best[row + j]
                    done = True
                    break
            if done:
                break
        if smaller:
            for i in range(n):
                row = i * n
                srow = inv[i] * n
                for j in range(n):
                    cand[row + j] = perm[src[srow + inv[j]]]
            for i in range(n * n):
                best[i] = cand[i]
    return PyBytes_FromStringAndSize(<const char *> best, n * n)
