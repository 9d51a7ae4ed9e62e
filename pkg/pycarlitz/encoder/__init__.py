"""
Renderers for command output.
"""

__all__ = ['jsonout', 'textout']

from .jsonout import JsonEncode
from .textout import TextEncode, series_text

class Encoder:
	def __init__(self):
		raise Exception("Do not instantiate, everything is a static method")

	@staticmethod
	def Json(obj):
		return JsonEncode(obj)

	@staticmethod
	def Text(obj, terms=None):
		return TextEncode(obj, terms)

	@staticmethod
	def Series(d, terms=None):
		return series_text(d, terms)

def format_cols(dat, pre="  ", celldiv=" ", rowdiv="\n", post=""):
	"""
	Simple method for formating multi-column data.
	"""

	# No data = no output
	if not len(dat):
		return ""

	# Widest cell per column
	maxes = [0] * max(len(row) for row in dat)
	for row in dat:
		for j,cell in enumerate(row):
			maxes[j] = max(maxes[j], len(cell))

	ret = []
	for row in dat:
		retrow = [("%%%ds" % maxes[j]) % cell for j,cell in enumerate(row)]
		ret.append(pre + celldiv.join(retrow) + post)

	return rowdiv.join(ret)
