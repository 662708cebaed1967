# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled regular-representation trace kernel.

Same contract as ``_kernel_py.word_trace``; propagates one starting basis
vector at a time through dense scratch buffers with an active-index list.
"""
import numpy as np


ctypedef long long i64


def word_trace(word, lmul, ldesc):
    cdef const int[:, :] L = np.ascontiguousarray(lmul, dtype=np.intc)
    cdef const unsigned char[:, :] Dsc = np.ascontiguousarray(ldesc, dtype=np.uint8)
    cdef const int[:] W = np.ascontiguousarray(list(word) or [0], dtype=np.intc)
    cdef int k = len(word)
    cdef int nb = L.shape[1]
    cdef int width = k + 1
    cdef i64[:, :] A = np.zeros((nb, width), dtype=np.int64)
    cdef i64[:, :] B = np.zeros((nb, width), dtype=np.int64)
    cdef int[:] act_a = np.zeros(nb, dtype=np.intc)
    cdef int[:] act_b = np.zeros(nb, dtype=np.intc)
    cdef int[:] stamp = np.full(nb, -1, dtype=np.intc)
    cdef i64[:] total = np.zeros(width, dtype=np.int64)
    cdef int x, s, t, j, y, z, row, na, nb_act, epoch = 0
    cdef i64 c, prev
    cdef i64[:, :] tmp_m
    cdef int[:] tmp_a
    for x in range(nb):
        act_a[0] = x
        na = 1
        A[x, 0] = 1
        for s in range(k - 1, -1, -1):
            row = W[s] - 1
            epoch += 1
            nb_act = 0
            for t in range(na):
                y = act_a[t]
                z = L[row, y]
                if stamp[z] != epoch:
                    stamp[z] = epoch
                    act_b[nb_act] = z
                    nb_act += 1
                if Dsc[row, y]:
                    if stamp[y] != epoch:
                        stamp[y] = epoch
                        act_b[nb_act] = y
                        nb_act += 1
                    # g T_y = (q-1) T_y + q T_{s y}
                    prev = 0
                    for j in range(width):
                        c = A[y, j]
                        B[y, j] += prev - c
                        B[z, j] += prev
                        prev = c
                else:
                    for j in range(width):
                        B[z, j] += A[y, j]
            for t in range(na):
                y = act_a[t]
                for j in range(width):
                    A[y, j] = 0
            tmp_m = A
            A = B
            B = tmp_m
            tmp_a = act_a
            act_a = act_b
            act_b = tmp_a
            na = nb_act
        for t in range(na):
            y = act_a[t]
            if y == x:
                for j in range(width):
                    total[j] += A[y, j]
            for j in range(width):
                A[y, j] = 0
    return [int(total[j]) for j in range(width)]
