import os

import pytest

HEAVY = os.environ.get("SKEWBRACE_HEAVY") == "1"

requires_heavy = pytest.mark.skipif(
    not HEAVY, reason="set SKEWBRACE_HEAVY=1 to run the expensive checks")
