# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mode evaluation kernels (see _modes_py for the reference)."""

from libc.math cimport sin

import numpy as np


def rect_modes(double[:, ::1] points, double[::1] k1, double[::1] k2,
               double a1, double a2):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t m = k1.shape[0]
    cdef Py_ssize_t i, j
    cdef double x, y
    out_arr = np.empty((n, m), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    b1_arr = a1 * np.asarray(k1)
    b2_arr = a2 * np.asarray(k2)
    cdef double[::1] b1 = b1_arr
    cdef double[::1] b2 = b2_arr
    with nogil:
        for i in range(n):
            x = points[i, 0]
            y = points[i, 1]
            for j in range(m):
                out[i, j] = sin(b1[j] * x) * sin(b2[j] * y)
    return out_arr


def folded_modes(double[:, ::1] points, double[:, :, ::1] linear,
                 double[:, ::1] shift, double[::1] signs,
                 double[::1] k1, double[::1] k2, double a1, double a2):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t m = k1.shape[0]
    cdef Py_ssize_t nh = signs.shape[0]
    cdef Py_ssize_t i, j, h
    cdef double x, y, qx, qy, s
    out_arr = np.zeros((n, m), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    b1_arr = a1 * np.asarray(k1)
    b2_arr = a2 * np.asarray(k2)
    cdef double[::1] b1 = b1_arr
    cdef double[::1] b2 = b2_arr
    with nogil:
        for i in range(n):
            x = points[i, 0]
            y = points[i, 1]
            for h in range(nh):
                qx = linear[h, 0, 0] * x + linear[h, 0, 1] * y + shift[h, 0]
                qy = linear[h, 1, 0] * x + linear[h, 1, 1] * y + shift[h, 1]
                s = signs[h]
                for j in range(m):
                    out[i, j] += s * sin(b1[j] * qx) * sin(b2[j] * qy)
    return out_arr
