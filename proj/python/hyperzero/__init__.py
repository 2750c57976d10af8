"""Zeros of regular polynomials over the quaternions and octonions."""

try:
    from ._hyperzero import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree test layout: the extension sits on sys.path
    from _hyperzero import *  # noqa: F401,F403
