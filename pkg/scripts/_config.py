"""Turn a dataclass config into command-line overrides."""

import argparse
import dataclasses


def parse_config(cls, description=""):
    p = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default
        kind = type(default) if default is not None else str
        if kind is tuple:
            p.add_argument(f"--{f.name.replace('_', '-')}", nargs="+", default=default, type=str)
        else:
            p.add_argument(f"--{f.name.replace('_', '-')}", default=default, type=kind)
    return cls(**vars(p.parse_args()))
