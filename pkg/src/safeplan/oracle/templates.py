"""Prompt templates for the HTTP backend.

Templates are plain text files with {slot} placeholders. The defaults
ship inside the package; a directory of same-named files can override
them.
"""

from __future__ import annotations

import string
from importlib import resources
from pathlib import Path

from ..errors import TemplateError

TEMPLATE_FILES = {
    "generate_scenario": "generate_scenario.txt",
    "generate_plan": "generate_plan.txt",
    "inspect": "inspect.txt",
    "reflect": "reflect.txt",
}


def load_template(role: str, template_dir: str | Path | None = None) -> str:
    filename = TEMPLATE_FILES.get(role)
    if filename is None:
        raise TemplateError(f"no template for role {role!r}")
    if template_dir is not None:
        override = Path(template_dir) / filename
        if override.exists():
            return override.read_text(encoding="utf-8")
    return (resources.files("safeplan") / "data" / "templates" / filename) \
        .read_text(encoding="utf-8")


def fill_template(template: str, slots: dict[str, str]) -> str:
    names = {name for _, name, _, _ in string.Formatter().parse(template)
             if name is not None}
    missing = sorted(names - set(slots))
    if missing:
        raise TemplateError(f"template needs slot(s) {', '.join(missing)}")
    return template.format(**{name: slots[name] for name in names})
