# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=True
"""Compiled normal-form engine.

Method-for-method mirror of the pure-Python engine in ``_kernel_py``; that
module is the reference and carries the algorithm documentation.  This one
flattens the context tables into C integer arrays at construction and runs
the sweep, append, and pair-scan loops without Python object traffic.
Canonical forms are unique, so parity with the reference is plain equality
of results (see the kernel parity test).
"""

from cpython cimport array
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

import array


cdef array.array _ITMPL = array.array("i", [])


cdef array.array _flat(seq):
    cdef Py_ssize_t n = len(seq)
    cdef array.array out = array.clone(_ITMPL, n, zero=False)
    cdef Py_ssize_t i
    for i in range(n):
        out.data.as_ints[i] = seq[i]
    return out


cdef class Engine:
    """Normal-form arithmetic over one context's simple tables."""

    backend = "cython"

    cdef public object tables
    cdef int _ns, _na, _delta, _order
    cdef bint _has_renorm
    # array.array objects own the memory; the int pointers alias them.
    cdef array.array _ldesc_o, _rmul_o, _lquot_o, _compl_l_o, _atoms_o
    cdef array.array _pows_o, _rx_o, _ry_o
    cdef int *_ldesc
    cdef int *_rmul
    cdef int *_lquot
    cdef int *_compl_l
    cdef int *_atoms
    cdef int *_pows
    cdef int *_rx
    cdef int *_ry
    # scratch buffers, grown on demand; all use is confined to single calls
    # under the GIL, so reuse across calls is safe.
    cdef int *_buf
    cdef int *_buf2
    cdef int *_buf3
    cdef Py_ssize_t _cap

    def __cinit__(self):
        self._buf = NULL
        self._buf2 = NULL
        self._buf3 = NULL
        self._cap = 0

    def __dealloc__(self):
        free(self._buf)
        free(self._buf2)
        free(self._buf3)

    def __init__(self, tables):
        self.tables = tables
        self._ns = tables.nsimples
        self._na = tables.natoms
        self._delta = tables.nsimples - 1
        self._order = tables.phi_order
        self._ldesc_o = _flat(tables.ldesc)
        self._rmul_o = _flat(tables.rmul)
        self._lquot_o = _flat(tables.lquot)
        self._compl_l_o = _flat(tables.compl_l)
        self._atoms_o = _flat(tables.atom_simple)
        pows = []
        for row in tables.phi_pows:
            pows.extend(row)
        self._pows_o = _flat(pows)
        self._ldesc = self._ldesc_o.data.as_ints
        self._rmul = self._rmul_o.data.as_ints
        self._lquot = self._lquot_o.data.as_ints
        self._compl_l = self._compl_l_o.data.as_ints
        self._atoms = self._atoms_o.data.as_ints
        self._pows = self._pows_o.data.as_ints
        self._has_renorm = tables.renorm_x is not None
        if self._has_renorm:
            self._rx_o = _flat(tables.renorm_x)
            self._ry_o = _flat(tables.renorm_y)
            self._rx = self._rx_o.data.as_ints
            self._ry = self._ry_o.data.as_ints
        self._reserve(64)

    cdef int _reserve(self, Py_ssize_t need) except -1:
        cdef Py_ssize_t cap = self._cap
        cdef int *nb
        cdef int *nb2
        cdef int *nb3
        if need <= cap:
            return 0
        while cap < need:
            cap = 2 * cap if cap else 64
        nb = <int *> malloc(cap * sizeof(int))
        nb2 = <int *> malloc(cap * sizeof(int))
        nb3 = <int *> malloc(cap * sizeof(int))
        if nb == NULL or nb2 == NULL or nb3 == NULL:
            free(nb)
            free(nb2)
            free(nb3)
            raise MemoryError
        if self._cap:
            memcpy(nb, self._buf, self._cap * sizeof(int))
            memcpy(nb2, self._buf2, self._cap * sizeof(int))
            memcpy(nb3, self._buf3, self._cap * sizeof(int))
        free(self._buf)
        free(self._buf2)
        free(self._buf3)
        self._buf = nb
        self._buf2 = nb2
        self._buf3 = nb3
        self._cap = cap
        return 0

    # -- C core ------------------------------------------------------------

    cdef inline int _phi_row(self, long k) nogil:
        cdef long r = k % self._order
        if r < 0:
            r += self._order
        return <int> r * self._ns

    cdef Py_ssize_t _csweep(self, int *fs, Py_ssize_t n) nogil:
        """In-place fixpoint sweep; identity factors are dropped as they
        appear.  Returns the new length."""
        cdef bint changed = True
        cdef Py_ssize_t i, k
        cdef int x, y, nx, a, mask, moved
        while changed:
            changed = False
            i = 0
            while i + 1 < n:
                x = fs[i]
                y = fs[i + 1]
                if self._has_renorm:
                    k = <Py_ssize_t> x * self._ns + y
                    nx = self._rx[k]
                    y = self._ry[k]
                    x = nx
                else:
                    while True:
                        mask = self._ldesc[y]
                        moved = 0
                        a = 0
                        while mask:
                            if mask & 1:
                                nx = self._rmul[x * self._na + a]
                                if nx >= 0:
                                    x = nx
                                    y = self._lquot[a * self._ns + y]
                                    moved = 1
                                    break
                            mask >>= 1
                            a += 1
                        if not moved:
                            break
                if x != fs[i]:
                    changed = True
                    fs[i] = x
                    if y == 0:
                        for k in range(i + 1, n - 1):
                            fs[k] = fs[k + 1]
                        n -= 1
                        continue
                    fs[i + 1] = y
                i += 1
        return n

    cdef tuple _pack(self, int *fs, Py_ssize_t n, long *dout):
        """Strip leading Delta factors into *dout and build the tail tuple."""
        cdef Py_ssize_t i = 0
        cdef long d = 0
        while i < n and fs[i] == self._delta:
            d += 1
            i += 1
        dout[0] = d
        return tuple([fs[k] for k in range(i, n)])

    cdef Py_ssize_t _load(self, int *dst, factors) except -1:
        """Copy a factor iterable into dst, dropping identity factors."""
        cdef Py_ssize_t n = 0
        cdef int f
        for obj in factors:
            f = obj
            if f != 0:
                dst[n] = f
                n += 1
        return n

    cdef int _letter_simple(self, int letter) except -1:
        cdef int a = letter if letter > 0 else -letter
        a -= 1
        if a < 0 or a >= self._na:
            raise ValueError(f"letter {letter!r} out of range for {self._na} atoms")
        return self._atoms[a]

    cdef Py_ssize_t _capp(self, int *fs, Py_ssize_t n, long *d, int letter) except -2:
        """In-place append of one signed letter to a canonical form."""
        cdef int s = self._letter_simple(letter)
        cdef int row
        cdef Py_ssize_t i
        cdef long dd
        if letter > 0:
            fs[n] = s
            n += 1
        else:
            row = self._phi_row(-1)
            for i in range(n):
                fs[i] = self._pows[row + fs[i]]
            d[0] -= 1
            s = self._compl_l[s]
            if s != 0:
                fs[n] = s
                n += 1
        n = self._csweep(fs, n)
        i = 0
        dd = 0
        while i < n and fs[i] == self._delta:
            dd += 1
            i += 1
        if i:
            for s in range(<int> i, <int> n):
                fs[s - i] = fs[s]
            n -= i
            d[0] += dd
        return n

    cdef bint _eq(self, int *a, Py_ssize_t na, int *b, Py_ssize_t nb) nogil:
        cdef Py_ssize_t i
        if na != nb:
            return False
        for i in range(na):
            if a[i] != b[i]:
                return False
        return True

    # -- public interface, matching the reference engine --------------------

    def normalize(self, factors):
        fs = list(factors)
        self._reserve(len(fs) + 1)
        cdef Py_ssize_t n = self._load(self._buf, fs)
        n = self._csweep(self._buf, n)
        cdef long d = 0
        out = self._pack(self._buf, n, &d)
        return int(d), out

    def phi_shift(self, factors, k):
        cdef int row = self._phi_row(k % self._order)
        return tuple([self._pows[row + <int> f] for f in factors])

    def mul(self, da, fa, db, fb):
        cdef Py_ssize_t n = len(fa) + len(fb) + 1
        self._reserve(n)
        cdef int row = self._phi_row(db % self._order)
        cdef Py_ssize_t i = 0
        cdef int f
        for obj in fa:
            f = obj
            self._buf[i] = self._pows[row + f]
            i += 1
        for obj in fb:
            f = obj
            if f != 0:
                self._buf[i] = f
                i += 1
        i = self._csweep(self._buf, i)
        cdef long d = 0
        out = self._pack(self._buf, i, &d)
        return da + db + int(d), out

    def inv(self, d, fs):
        cdef Py_ssize_t l = len(fs)
        self._reserve(l + 1)
        cdef long dl = d
        cdef Py_ssize_t i
        cdef int row, c
        cdef Py_ssize_t n = 0
        for i in range(l - 1, -1, -1):
            row = self._phi_row(-(i + dl))
            c = self._compl_l[<int> fs[i]]
            if c != 0:
                self._buf[n] = self._pows[row + c]
                n += 1
        n = self._csweep(self._buf, n)
        cdef long dd = 0
        out = self._pack(self._buf, n, &dd)
        return int(-l - dl + dd), out

    def letter_nf(self, letter):
        cdef int lt = letter
        cdef int s = self._letter_simple(lt)
        cdef int c
        if lt > 0:
            return 0, (s,)
        c = self._compl_l[s]
        return -1, (c,) if c != 0 else ()

    def append_letter(self, d, fs, letter):
        cdef Py_ssize_t n = len(fs)
        self._reserve(n + 2)
        cdef Py_ssize_t i = 0
        cdef int f
        for obj in fs:
            f = obj
            self._buf[i] = f
            i += 1
        cdef long dd = d
        n = self._capp(self._buf, i, &dd, letter)
        return int(dd), tuple([self._buf[i] for i in range(n)])

    def from_letters(self, letters):
        cdef Py_ssize_t m = len(letters)
        self._reserve(m + 2)
        cdef long d = 0
        cdef Py_ssize_t n = 0
        for obj in letters:
            n = self._capp(self._buf, n, &d, obj)
        return int(d), tuple([self._buf[i] for i in range(n)])

    def prefix_states(self, letters):
        cdef Py_ssize_t m = len(letters)
        self._reserve(m + 2)
        cdef long d = 0
        cdef Py_ssize_t n = 0
        out = [(0, ())]
        cdef Py_ssize_t i
        for obj in letters:
            n = self._capp(self._buf, n, &d, obj)
            out.append((int(d), tuple([self._buf[i] for i in range(n)])))
        return out

    def pair_scan(self, letters, first_only=False):
        cdef Py_ssize_t n = len(letters)
        cdef array.array lets = _flat(letters)
        cdef int *lp = lets.data.as_ints
        self._reserve(n + 2)
        cdef bint stop = first_only
        out = []
        # b and c are running canonical forms (see the reference docstring);
        # _buf3 receives each c . letter_j before it replaces c.
        cdef int *b = self._buf
        cdef int *c = self._buf2
        cdef int *a = self._buf3
        cdef int *swap
        cdef Py_ssize_t nb, nc, na_
        cdef long db, dc, da_
        cdef Py_ssize_t i, j
        cdef int li, lj
        for i in range(n - 1):
            li = lp[i]
            nb = 0
            db = 0
            nc = 0
            dc = 0
            nc = self._capp(c, nc, &dc, li)
            for j in range(i + 1, n):
                lj = lp[j]
                memcpy(a, c, nc * sizeof(int))
                na_ = nc
                da_ = dc
                na_ = self._capp(a, na_, &da_, lj)
                if ((li > 0) != (lj > 0)) and da_ == db and self._eq(a, na_, b, nb):
                    out.append((i, j))
                    if stop:
                        return out
                nb = self._capp(b, nb, &db, lj)
                swap = c
                c = a
                a = swap
                nc = na_
                dc = da_
        return out
