import json
from pathlib import PurePath

from core import __version__

TOOL_NAME = 'manipulability'

# Django's own command options plus execution knobs that must not change a report.
EXCLUDED_FLAGS = frozenset({
    'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color',
    'force_color', 'skip_checks', 'workers', 'backend', 'output', 'format',
})


def report_flags(options):
    return {
        key: str(value) if isinstance(value, PurePath) else value
        for key, value in sorted(options.items())
        if key not in EXCLUDED_FLAGS and not key.startswith('_')
    }


def build_report(command, options, result):
    return {
        'tool': TOOL_NAME,
        'version': __version__,
        'command': command,
        'flags': report_flags(options),
        'result': result,
    }


def dump_json(payload):
    return json.dumps(payload, sort_keys=True, ensure_ascii=True, indent=2)
