"""Metaplectic coherent states: overlaps, Mp(2) algebra, E(2) geometry and Wigner data."""

import json

from ._mpstates import *  # noqa: F401,F403
from ._mpstates import reconcile_json as _reconcile_json


def reconcile():
    """Reconciliation tables as a dict of {"columns": [...], "rows": [...]}."""
    return json.loads(_reconcile_json())
