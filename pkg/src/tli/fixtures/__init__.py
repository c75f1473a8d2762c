"""Bundled example diagrams."""

import json
import os

from ..diagram import parse_diagram

_DIR = os.path.dirname(__file__)


def fixture_names():
    """Names of all bundled diagrams, sorted."""
    return sorted(
        fn[:-5] for fn in os.listdir(_DIR) if fn.endswith(".json")
    )


def fixture_path(name):
    path = os.path.join(_DIR, name.replace("-", "_") + ".json")
    if not os.path.exists(path):
        raise KeyError("no bundled diagram named %r" % name)
    return path


def load_fixture(name):
    """Load a bundled diagram by name (e.g. ``trefoil``, ``theta1``)."""
    with open(fixture_path(name)) as fh:
        return parse_diagram(json.load(fh))
