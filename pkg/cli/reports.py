"""
Report envelope and renderers.

A report is plain data: the tool version, the schema version, the command,
the validated configuration and one entry per section in the order the
command produced them.  Timings are only included when
CRFRAMES_REPORT_TIMING is set, so that a report depends on its
configuration alone.
"""

from rest_framework.renderers import JSONRenderer
from sympy.polys.domains import QQ_I

from crframes import REPORT_SCHEMA, __version__
from crframes.conf import setting
from jetalg.coefficients import format_coefficient


def plain(value):
    """Report-safe copy of nested data; Gaussian rationals become their canonical text."""
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if QQ_I.of_type(value):
        return format_coefficient(value)
    return str(value)


def build_report(command, config, sections, timings=None):
    report = {
        'tool_version': __version__,
        'schema': REPORT_SCHEMA,
        'command': command,
        'config': config,
        'sections': sections,
    }
    if timings and setting('CRFRAMES_REPORT_TIMING'):
        report['timing'] = {name: round(seconds, 3) for name, seconds in timings.items()}
    return report


def render_json(report):
    return JSONRenderer().render(report, renderer_context={'indent': 2}).decode('utf-8') + '\n'


def _text_lines(value, indent=0):
    pad = '  ' * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f'{pad}{key}:'
                yield from _text_lines(item, indent + 1)
            else:
                yield f'{pad}{key}: {_scalar(item)}'
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                yield f'{pad}-'
                yield from _text_lines(item, indent + 1)
            else:
                yield f'{pad}- {_scalar(item)}'
    else:
        yield f'{pad}{_scalar(value)}'


def _scalar(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (dict, list)):
        return '(none)'
    return str(value)


def render_text(report):
    """
    Human-readable rendering.

    A section carrying ``equations_text`` prints those lines verbatim (the
    printed equation layout); everything else is shown as an indented
    outline.
    """
    lines = [f'crframes {report["tool_version"]} {report["command"]} (schema {report["schema"]})']
    lines.extend(_text_lines({'config': report['config']}))
    for name, section in report['sections'].items():
        lines.append('')
        lines.append(f'== {name} ==')
        if isinstance(section, dict) and 'equations_text' in section:
            lines.extend(section['equations_text'])
            rest = {k: v for k, v in section.items() if k not in ('equations_text', 'equations')}
            lines.extend(_text_lines(rest))
        else:
            lines.extend(_text_lines(section))
    if 'timing' in report:
        lines.append('')
        lines.extend(_text_lines({'timing': report['timing']}))
    return '\n'.join(lines) + '\n'


RENDERERS = {'json': render_json, 'text': render_text}


def render(report, fmt='json'):
    return RENDERERS[fmt](report)
