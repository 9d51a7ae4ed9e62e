from . import expr as exprloc
from . import config as configloc

from ..errors import ParseError

__all__ = ['ExprTokenizer', 'ConfigTokenizer', 'ParseTuple', 'Factor']

# --------------------------------------------------------------------------------------------------------
# --------------------------------------------------------------------------------------------------------

def ParseTuple(txt):
	"""
	Parses "1,2,3" into (1,2,3).
	"""

	parts = [p.strip() for p in str(txt).split(',')]
	try:
		ret = tuple(int(p) for p in parts if len(p))
	except ValueError:
		raise ParseError("Expected a comma separated list of integers, got '%s'" % txt)

	if not len(ret):
		raise ParseError("Empty index tuple '%s'" % txt)
	return ret

class Factor:
	"""
	One factor of a target monomial: pi^power or zeta(args)^power.
	"""

	# 'pi' or 'zeta'
	kind = None

	# Weights for zeta, None for pi
	args = None

	# Integer exponent (may be negative)
	power = None

	def __init__(self, kind, args, power):
		self.kind = kind
		self.args = args
		self.power = power

	def __eq__(self, o):
		return isinstance(o, Factor) and (o.kind, o.args, o.power) == (self.kind, self.args, self.power)

	def __repr__(self):				return str(self)
	def __str__(self):
		base = self.kind if self.args is None else "%s(%s)" % (self.kind, ",".join(str(a) for a in self.args))
		return base if self.power == 1 else "%s^%d" % (base, self.power)

# --------------------------------------------------------------------------------------------------------
# --------------------------------------------------------------------------------------------------------

class ExprTokenizer:
	"""
	Recursive descent over the expression tokens.
	"""

	# Token list and cursor
	toks = None
	pos = 0

	# Source text for messages
	txt = None

	def __init__(self, txt):
		self.txt = txt
		self.toks = exprloc.TokenizeString(txt)
		self.pos = 0

	def peek(self, typ=None, val=None):
		if self.pos >= len(self.toks):
			return None

		tok = self.toks[self.pos]
		if typ is not None and tok.type != typ:
			return None
		if val is not None and tok.value != val:
			return None
		return tok

	def take(self, typ, val=None):
		tok = self.peek(typ, val)
		if tok is None:
			got = self.toks[self.pos].value if self.pos < len(self.toks) else "end of input"
			want = typ if val is None else "'%s'" % val
			raise ParseError("Expected %s but found '%s' in '%s'" % (want, got, self.txt))
		self.pos += 1
		return tok

	def done(self):
		if self.pos != len(self.toks):
			raise ParseError("Trailing input '%s' in '%s'" % (self.toks[self.pos].value, self.txt))

	# ----------------------------------------------------------------------------------------------------
	# Targets: monomial (',' monomial)*

	def ParseTargets(self):
		"""
		Returns a list of (label, [Factor, ...]).
		"""

		ret = []
		while True:
			start = self.pos
			factors = self._monomial()
			label = self._label(start, self.pos)
			ret.append((label, factors))

			if self.peek('COMMA'):
				self.take('COMMA')
				continue
			break

		self.done()
		return ret

	def _label(self, a, b):
		if a >= len(self.toks):
			return ""

		lo = self.toks[a].lexpos
		hi = self.toks[b-1].lexpos + len(str(self.toks[b-1].value))
		return "".join(self.txt[lo:hi].split())

	def _monomial(self):
		factors = [self._factor()]
		while self.peek('TIMES'):
			self.take('TIMES')
			factors.append(self._factor())
		return factors

	def _factor(self):
		name = self.take('NAME')

		if name.value == 'pi':
			args = None
		elif name.value == 'zeta':
			self.take('LPAREN')
			args = [self.take('NUM').value]
			while self.peek('COMMA'):
				self.take('COMMA')
				args.append(self.take('NUM').value)
			self.take('RPAREN')
			args = tuple(args)
		else:
			raise ParseError("Unknown target '%s' in '%s': only pi and zeta(...) are allowed" % (name.value, self.txt))

		power = 1
		if self.peek('CARET'):
			self.take('CARET')
			sign = 1
			if self.peek('MINUS'):
				self.take('MINUS')
				sign = -1
			power = sign * self.take('NUM').value

		return Factor(name.value, args, power)

	# ----------------------------------------------------------------------------------------------------
	# Polynomials in theta and t

	def ParsePolynomial(self, field):
		"""
		Parses into a BiPoly over @field.  Integer literals are read mod p; g is the field generator.
		"""

		ret = self._sum(field)
		self.done()
		return ret

	def _sum(self, field):
		if self.peek('MINUS'):
			self.take('MINUS')
			ret = -self._product(field)
		else:
			ret = self._product(field)

		while self.peek('PLUS') or self.peek('MINUS'):
			op = self.toks[self.pos].type
			self.pos += 1
			rhs = self._product(field)
			ret = ret + rhs if op == 'PLUS' else ret - rhs
		return ret

	def _product(self, field):
		ret = self._power(field)
		while self.peek('TIMES'):
			self.take('TIMES')
			ret = ret * self._power(field)
		return ret

	def _power(self, field):
		base = self._atom(field)
		if self.peek('CARET'):
			self.take('CARET')
			base = base ** self.take('NUM').value
		return base

	def _atom(self, field):
		from ..bipoly import BiPoly

		if self.peek('LPAREN'):
			self.take('LPAREN')
			ret = self._sum(field)
			self.take('RPAREN')
			return ret

		if self.peek('NUM'):
			return BiPoly.Constant(field, int(field.Prime(self.take('NUM').value)))

		name = self.take('NAME').value
		if name == 'theta':
			return BiPoly.Theta(field)
		elif name == 't':
			return BiPoly.T(field)
		elif name == 'g':
			if field.m == 1:
				raise ParseError("Generator g is only available in extension fields, F_%d is prime" % field.q)
			return BiPoly.Constant(field, field.p)
		else:
			raise ParseError("Unknown symbol '%s' in polynomial '%s'" % (name, self.txt))

class ConfigTokenizer:
	"""
	Reads key = value pairs from configuration text.
	"""

	# Raw text
	txt = None

	def __init__(self, txt):
		self.txt = txt

	def Parse(self):
		ret = {}
		toks = configloc.TokenizeString(self.txt)

		i = 0
		while i < len(toks):
			tok = toks[i]
			if tok.type in ('COMMENT', 'NEWLINE'):
				i += 1
				continue

			if tok.type != 'NAME' or i+1 >= len(toks) or toks[i+1].type != 'EQUALS':
				raise ParseError("Expected 'key = value' on line %d" % tok.lineno)
			if i+2 >= len(toks) or toks[i+2].type != 'VALUE':
				raise ParseError("Missing value for '%s' on line %d" % (tok.value, tok.lineno))

			ret[tok.value.replace('-', '_')] = toks[i+2].value
			i += 3

		return ret
