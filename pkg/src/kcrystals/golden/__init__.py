"""Golden data files for the verification suites."""

from importlib import resources


def text(name: str) -> str:
    return resources.files(__package__).joinpath(name).read_text()
