"""
Human-readable output.  Series print as sum c*(-theta)^(a/(q-1)) with descending exponents of theta.
"""

from fractions import Fraction

# Terms shown per series before eliding to the error term
TERMS = 12

def _exponent(j, s):
	"""
	Exponent of (-theta) in w^j = (-theta)^(-j/s).
	"""

	f = Fraction(-j, s)
	if f.denominator == 1:
		return "%d" % f.numerator
	return "(%d/%d)" % (f.numerator, f.denominator)

def _monomial(c, j, s):
	if j == 0:
		return "%d" % c
	mono = "(-theta)^%s" % _exponent(j, s)
	return mono if c == 1 else "%d*%s" % (c, mono)

def series_text(d, terms=None):
	"""
	Render a serialized series (the dict from LaurentSeries.Serialize).
	"""

	terms = TERMS if terms is None else terms
	s = d['q'] - 1
	big = "O((-theta)^%s)" % _exponent(d['prec'], s)

	coeffs = d['coeffs']
	if not len(coeffs):
		return big

	parts = [_monomial(c, j, s) for j,c in coeffs[:terms]]
	if len(coeffs) > terms:
		parts.append("... (%d more)" % (len(coeffs) - terms))
	parts.append(big)
	return " + ".join(parts)

def _is_series(o):
	return isinstance(o, dict) and 'w_def' in o

def _is_table(o):
	return isinstance(o, list) and len(o) and all(isinstance(r, list) and all(not isinstance(c, (dict, list)) or c is None or _flat(c) for c in r) for r in o)

def _flat(o):
	return isinstance(o, list) and all(not isinstance(x, (dict, list)) for x in o)

def _scalar(o):
	if o is None:
		return "-"
	if isinstance(o, bool):
		return "yes" if o else "no"
	if isinstance(o, list):
		return "[%s]" % ",".join(_scalar(x) for x in o)
	return str(o)

def _lines(obj, indent, terms):
	from . import format_cols

	pad = "  " * indent
	ret = []
	for k,v in obj.items():
		if _is_series(v):
			ret.append("%s%s = %s" % (pad, k, series_text(v, terms)))
		elif isinstance(v, dict):
			ret.append("%s%s:" % (pad, k))
			ret += _lines(v, indent+1, terms)
		elif _is_table(v):
			ret.append("%s%s:" % (pad, k))
			ret.append(format_cols([[_scalar(c) for c in row] for row in v], pre=pad + "  "))
		elif isinstance(v, list) and len(v) and all(_is_series(x) for x in v):
			ret.append("%s%s:" % (pad, k))
			for i,x in enumerate(v):
				ret.append("%s  [%d] %s" % (pad, i, series_text(x, terms)))
		elif isinstance(v, list) and len(v) and all(isinstance(x, dict) for x in v):
			ret.append("%s%s:" % (pad, k))
			for i,x in enumerate(v):
				ret.append("%s  [%d]" % (pad, i))
				ret += _lines(x, indent+2, terms)
		else:
			ret.append("%s%s = %s" % (pad, k, _scalar(v)))
	return ret

def TextEncode(obj, terms=None):
	"""
	Render a payload dict as indented key = value lines; series and tables get their own layout.
	"""

	if _is_series(obj):
		return series_text(obj, terms) + "\n"
	return "\n".join(_lines(obj, 0, terms)) + "\n"
