"""Locates the in-tree build when the tests are run outside ctest."""

import os
import sys

_here = os.path.dirname(os.path.abspath(__file__))
_root = os.path.dirname(os.path.dirname(_here))


def _first_dir(*candidates):
    for path in candidates:
        if path and os.path.isdir(path):
            return path
    return None


_pkg_dir = _first_dir(os.environ.get("PBRIGID_PYTHON"), os.path.join(_root, "build", "python"))
if _pkg_dir:
    try:
        import pbrigid  # noqa: F401
    except ImportError:
        sys.path.insert(0, _pkg_dir)

if not os.environ.get("PBRIGID_CLI"):
    _cli = os.path.join(_root, "build", "pbrigid")
    if os.path.exists(_cli):
        os.environ["PBRIGID_CLI"] = _cli

if not os.environ.get("PBRIGID_SCHEMAS"):
    _schemas = os.path.join(_root, "docs", "schemas")
    if os.path.isdir(_schemas):
        os.environ["PBRIGID_SCHEMAS"] = _schemas
