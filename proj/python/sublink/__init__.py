"""Python bindings for the sublink proof engine."""

import json

from ._core import SublinkError, canonical, entails
from ._core import Session as _Session
from ._core import check as _check

__all__ = ["Session", "SublinkError", "canonical", "check", "entails"]


def check(trace):
    """Replay a trace (dict or JSON text); returns (exit_code, report)."""
    if not isinstance(trace, str):
        trace = json.dumps(trace)
    return _check(trace)


class Session:
    """A proof in progress over a problem file."""

    def __init__(self, problem=None, *, _core=None):
        self._s = _core if _core is not None else _Session(problem)

    @classmethod
    def replay(cls, trace):
        if not isinstance(trace, str):
            trace = json.dumps(trace)
        return cls(_core=_Session.replay(trace))

    @property
    def state(self):
        return json.loads(self._s.snapshot())["state"]

    @property
    def complete(self):
        return self._s.complete

    def render(self):
        return self._s.render()

    def apply(self, action):
        """Apply an action record; returns the linking trace of a drag-and-drop."""
        return json.loads(self._s.apply(json.dumps(action)))

    def click(self, goal, item, path=()):
        return self.apply({"type": "click", "goal": goal, "item": item, "path": list(path)})

    def dnd(self, goal, src, dst):
        """`src` and `dst` are (item, path) pairs."""
        return self.apply({
            "type": "dnd",
            "goal": goal,
            "src": {"item": src[0], "path": list(src[1])},
            "dst": {"item": dst[0], "path": list(dst[1])},
        })

    def candidates(self, goal, src_item, src_path, dst_item):
        return json.loads(self._s.candidates(goal, src_item, list(src_path), dst_item))

    def trace(self):
        return json.loads(self._s.trace())
