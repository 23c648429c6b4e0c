"""Python front end over the C++ core.

Every function takes plain JSON-shaped Python values (dicts, lists, strings,
ints) in the same schemas the command-line tool reads from files, and returns
the result object as Python values.
"""

import json

from ._gable import GableError, commands
from ._gable import run as _run

__all__ = [
    "GableError",
    "cech",
    "commands",
    "cross",
    "homology",
    "limit",
    "nerve",
    "roof",
    "run",
    "verify",
]


def run(command, **request):
    """Runs any command; keyword names match the request fields."""
    return json.loads(_run(command, json.dumps(request)))


def homology(complex, k=None, sub=None, reduced=False):
    request = {"complex": complex, "reduced": reduced}
    if k is not None:
        request["k"] = k
    if sub is not None:
        request["sub"] = sub
    return run("homology", **request)


def cross(left, right, complex=None):
    request = {"terms": [left, right]}
    if complex is not None:
        request["complex"] = complex
    return run("cross", **request)


def roof(terms, complex=None):
    request = {"terms": terms}
    if complex is not None:
        request["complex"] = complex
    return run("roof", **request)


def nerve(cover):
    return run("nerve", covers=[cover])


def cech(tower, k):
    return run("cech", tower=tower, k=k)


def limit(system):
    return run("limit", system=system)


def verify(suite="all", seed=0, jobs=1, max_k=3):
    return run("verify", suite=suite, seed=seed, jobs=jobs, max_k=max_k)
