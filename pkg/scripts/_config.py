"""Turn a dataclass config into command-line overrides."""
from __future__ import annotations

import argparse
import dataclasses
from typing import TypeVar

T = TypeVar("T")


def parse_config(cls: type[T], description: str, argv=None) -> T:
    p = argparse.ArgumentParser(description=description)
    defaults = cls()
    for f in dataclasses.fields(cls):
        value = getattr(defaults, f.name)
        flag = "--" + f.name.replace("_", "-")
        if isinstance(value, bool):
            p.add_argument(flag, action=argparse.BooleanOptionalAction, default=value)
        elif isinstance(value, tuple):
            kind = type(value[0]) if value else str
            p.add_argument(flag, nargs="+", type=kind, default=value)
        else:
            p.add_argument(flag, type=type(value) if value is not None else str, default=value)
    ns = p.parse_args(argv)
    return cls(**{f.name: (tuple(v) if isinstance(v, list) else v)
                  for f in dataclasses.fields(cls) for v in [getattr(ns, f.name)]})
