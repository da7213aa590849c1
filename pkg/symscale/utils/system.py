__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import platform
from datetime import datetime, timezone
from typing import Dict

# third-party imports
import psutil


def system_snapshot() -> Dict:
    """
    Host description stored alongside run records.
    """
    try:
        cpu_freq = psutil.cpu_freq()
    except FileNotFoundError:
        cpu_freq = None
    uname = platform.uname()
    return {
        'date': datetime.now(timezone.utc).isoformat(),
        'sys_cpu_count': psutil.cpu_count(),
        'sys_cpu_freq': cpu_freq.current if cpu_freq else None,
        'sys_ram_total': psutil.virtual_memory().total,
        'sys_os': f'{uname.system} {uname.release} ({uname.version})',
        'sys_node_name': uname.node,
        'sys_arch': uname.machine,
        'python': platform.python_version(),
    }
