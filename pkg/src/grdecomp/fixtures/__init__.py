"""Shipped example sessions."""
from __future__ import annotations

import json
from importlib import resources

from ..errors import UnknownFixture

NAMES = ("fermion", "exterior", "hecke_s2", "hecke_s2_tower", "hecke_s3_e3", "nonsplit_rotation")


def fixture_data(name):
    if name not in NAMES:
        raise UnknownFixture(f"unknown fixture {name!r}; available: {', '.join(NAMES)}")
    text = resources.files(__package__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def fixture(name, validate=True):
    """The shipped session ``name``, parsed and validated."""
    from ..session import session_from_dict

    return session_from_dict(fixture_data(name), validate=validate, source=f"fixture {name}")
