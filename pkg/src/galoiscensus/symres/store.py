"""The on-disk resolvent cache shipped inside the package.

Each resolvent lives in ``data/resolvents/<name>.txt`` as described in
Resolvent.to_text.  Loading never regenerates silently unless the file is
missing; the ``resolvent --verify`` CLI verb regenerates and diffs.
"""

import difflib
import os
from functools import lru_cache

from .resolvent import Resolvent, orbit_resolvent
from .specs import NAMED_SPECS

CACHE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                         "data", "resolvents")


def cache_path(name):
    return os.path.join(CACHE_DIR, "%s.txt" % name)


def generate(name, progress=None):
    if name not in NAMED_SPECS:
        raise KeyError("unknown resolvent %r (known: %s)" % (name, ", ".join(sorted(NAMED_SPECS))))
    spec = NAMED_SPECS[name]()
    spec.check()
    return orbit_resolvent(spec, progress=progress)


@lru_cache(maxsize=None)
def load_resolvent(name):
    """Resolvent from the packaged cache, generating it if the file is absent."""
    path = cache_path(name)
    if os.path.exists(path):
        with open(path, encoding="ascii", newline="\n") as fh:
            return Resolvent.from_text(fh.read())
    return generate(name)


def write_cache(resolvent):
    os.makedirs(CACHE_DIR, exist_ok=True)
    with open(cache_path(resolvent.name), "w", encoding="ascii", newline="\n") as fh:
        fh.write(resolvent.to_text())


def verify_cache(name, progress=None):
    """Regenerate `name` and compare with the cached text byte for byte.

    Returns (matches, diff_lines)."""
    fresh = generate(name, progress=progress).to_text()
    path = cache_path(name)
    if not os.path.exists(path):
        return False, ["cache file %s is missing" % path]
    with open(path, encoding="ascii", newline="\n") as fh:
        cached = fh.read()
    if cached == fresh:
        return True, []
    diff = list(difflib.unified_diff(cached.split("\n"), fresh.split("\n"),
                                     "cache", "regenerated", lineterm="", n=0))
    return False, diff[:40]
