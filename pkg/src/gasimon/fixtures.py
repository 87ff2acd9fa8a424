"""Reference function tables shipped with the package."""

from __future__ import annotations

from importlib import resources

from .function_model import FunctionTable, parse_table

NAMES = ("table1", "table2", "table4")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files("gasimon").joinpath("data", f"{name}.txt").read_text(encoding="utf-8")


def load_fixture(name: str) -> FunctionTable:
    return parse_table(fixture_text(name))


def fixtures_for(n: int, m: int) -> list[tuple[str, FunctionTable]]:
    out = []
    for name in NAMES:
        f = load_fixture(name)
        if (f.n, f.m) == (n, m):
            out.append((name, f))
    return out
