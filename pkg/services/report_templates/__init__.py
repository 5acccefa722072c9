# -*- coding: utf-8 -*-
import json
import logging
import os

from jinja2 import Environment, FileSystemLoader, TemplateNotFound

_logger = logging.getLogger(__name__)
_TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), "text")

_ENV = Environment(
    loader=FileSystemLoader(_TEMPLATE_DIR),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    autoescape=False,
)


def _load(filename):
    try:
        return _ENV.get_template(filename)
    except TemplateNotFound:
        _logger.error(f"Report template not found: {os.path.join(_TEMPLATE_DIR, filename)}")
        raise


def _render(template, **kwargs):
    return _load(template).render(**kwargs)


# ── Text reports ──────────────────────────────────────────────────────────────


def render_info(info):
    return _render("info.txt", **info)


def render_quantity(result):
    return _render("quantity.txt", **result)


def render_report(tool_version, input_echo, records, counts, passed):
    return _render("report.txt",
        tool_version=tool_version, input_echo=input_echo,
        records=[r.to_dict() for r in records],
        counts=sorted(counts.items()), passed=passed)


# ── JSON lines ────────────────────────────────────────────────────────────────


def render_lines(tool_version, input_echo, rows):
    """Header object, then one JSON object per row."""
    lines = [json.dumps({"tool_version": tool_version, "input_echo": input_echo}, ensure_ascii=False)]
    lines += [json.dumps(row, ensure_ascii=False, sort_keys=True) for row in rows]
    return "\n".join(lines) + "\n"
