"""
JSON output.  Keys keep the order the payload was built in and nothing time-dependent is emitted,
so identical runs give identical bytes.
"""

import json

import numpy as np

def _default(o):
	if isinstance(o, np.integer):
		return int(o)
	if isinstance(o, np.ndarray):
		return o.tolist()
	if isinstance(o, (tuple, set, frozenset)):
		return list(o)
	if hasattr(o, 'Serialize'):
		return o.Serialize()
	raise TypeError("Object of type %s is not JSON serializable" % type(o).__name__)

def JsonEncode(obj):
	return json.dumps(obj, indent=2, default=_default) + "\n"
