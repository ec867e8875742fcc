import ctypes
import os

import pytest


@pytest.fixture(scope="session")
def cabi():
    path = os.environ.get("FFIBENCH_CABI_SO")
    if not path:
        pytest.skip("FFIBENCH_CABI_SO not set")
    lib = ctypes.CDLL(path)
    doubles = ctypes.POINTER(ctypes.c_double)
    for name in ("mean", "stddev"):
        fn = getattr(lib, name)
        fn.argtypes = [doubles, ctypes.c_uint64]
        fn.restype = ctypes.c_double
    lib.array_init.argtypes = [doubles, ctypes.c_uint64]
    lib.array_init.restype = ctypes.c_void_p
    for name in ("array_mean", "array_stddev"):
        fn = getattr(lib, name)
        fn.argtypes = [ctypes.c_void_p]
        fn.restype = ctypes.c_double
    lib.array_free.argtypes = [ctypes.c_void_p]
    lib.array_free.restype = None
    return lib


def as_c_array(values):
    return (ctypes.c_double * len(values))(*values)
