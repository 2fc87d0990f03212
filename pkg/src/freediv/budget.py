"""Wall-clock deadlines shared by the long-running kernels."""

import time
from contextlib import contextmanager
from contextvars import ContextVar


class ResourceExhausted(RuntimeError):
    """Raised when a computation runs past its deadline."""


_deadline = ContextVar("freediv_deadline", default=None)


@contextmanager
def deadline(seconds):
    """Run the enclosed block with a deadline `seconds` from now (None = no limit).

    Nested deadlines keep the tighter of the two.
    """
    prev = _deadline.get()
    if seconds is None:
        new = prev
    else:
        new = time.monotonic() + float(seconds)
        if prev is not None:
            new = min(prev, new)
    tok = _deadline.set(new)
    try:
        yield
    finally:
        _deadline.reset(tok)


def check():
    d = _deadline.get()
    if d is not None and time.monotonic() > d:
        raise ResourceExhausted("deadline exceeded")


def remaining():
    d = _deadline.get()
    if d is None:
        return None
    return d - time.monotonic()
