"""
Finite fields F_q, q = p^m, used as the coefficient field of everything else.

Arithmetic is delegated to galois; this module pins the defining polynomial so the integer
representation of an element (sum of coords_i * p^i) is identical across runs and machines.
"""

import logging

import galois
import numpy as np

from .errors import ConfigError, FieldZeroDivisionError

log = logging.getLogger(__name__)

# Largest field order supported
MAX_ORDER = 64

# Conway polynomials for the non-prime orders up to 64, coefficients in descending degree
# Prime fields use the modulus x (F_p itself)
MODULI = {
	(2,2): [1,1,1],
	(2,3): [1,0,1,1],
	(2,4): [1,0,0,1,1],
	(2,5): [1,0,0,1,0,1],
	(2,6): [1,0,1,1,0,1,1],
	(3,2): [1,2,2],
	(3,3): [1,0,2,1],
	(5,2): [1,4,2],
	(7,2): [1,6,3],
}

# FieldParams instances keyed by (p,m) so equal fields are the same object
_registry = {}

def isprime(n):
	if n < 2:
		return False

	d = 2
	while d*d <= n:
		if n % d == 0:
			return False
		d += 1

	return True

def factor_order(q):
	"""
	Split the field order @q into (p, m) with q = p^m.
	"""

	if type(q) != int or q < 2:
		raise ConfigError("Field order must be an integer >= 2, got '%s'" % (q,))
	if q > MAX_ORDER:
		raise ConfigError("Field order %d exceeds the supported maximum of %d" % (q, MAX_ORDER))

	for p in range(2, q+1):
		if not isprime(p):
			continue

		m = 0
		r = q
		while r % p == 0:
			r //= p
			m += 1

		if m and r == 1:
			return (p, m)

		# First prime divisor decides it
		if m:
			break

	raise ConfigError("Field order %d is not a prime power" % q)

class FieldParams:
	"""
	Parameters of F_q and the galois field class that does the arithmetic.
	Use FieldParams.Get(q) rather than the constructor so that equal fields compare by identity.
	"""

	# Characteristic, extension degree and order
	p = None
	m = None
	q = None

	# Defining polynomial over F_p, coefficients in descending degree
	modulus = None

	# galois.FieldArray subclass
	GF = None

	def __init__(self, p, m=1):
		if not isprime(p):
			raise ConfigError("Characteristic %d is not prime" % p)
		if m < 1:
			raise ConfigError("Extension degree must be >= 1, got %d" % m)
		if p**m > MAX_ORDER:
			raise ConfigError("Field order %d^%d exceeds the supported maximum of %d" % (p, m, MAX_ORDER))

		self.p = p
		self.m = m
		self.q = p**m

		if m == 1:
			self.modulus = [1, 0]
			self.GF = galois.GF(p)
		else:
			self.modulus = list(MODULI[(p,m)])
			prime = galois.GF(p)
			self.GF = galois.GF(self.q, irreducible_poly=galois.Poly(self.modulus, field=prime))

		log.debug("Initialized F_%d with modulus %s", self.q, self.modulus)

	@staticmethod
	def Get(q):
		"""
		Gets the (shared) FieldParams for the field of order @q.
		"""

		p,m = factor_order(q)
		if (p,m) not in _registry:
			_registry[(p,m)] = FieldParams(p, m)

		return _registry[(p,m)]

	def __repr__(self):				return str(self)
	def __str__(self):				return "<FieldParams q=%d p=%d m=%d>" % (self.q, self.p, self.m)

	def __eq__(self, o):
		return isinstance(o, FieldParams) and o.p == self.p and o.m == self.m
	def __ne__(self, o):
		return not self.__eq__(o)
	def __hash__(self):
		return hash((self.p, self.m))

	# --------------------------------------------------------------------------------
	# Array helpers

	def Scalar(self, v):
		"""
		Field scalar from its integer representation.
		"""
		return self.GF(int(v))

	def Prime(self, k):
		"""
		Image of the integer @k in the prime subfield (k mod p).
		"""
		return self.GF(int(k) % self.p)

	def Zeros(self, n):
		return self.GF.Zeros(n)

	def Array(self, values):
		return self.GF([int(v) for v in values])

	def Element(self, v):
		return FqElem(self, v)

	def Elements(self):
		"""
		All q elements, ordered by integer representation.
		"""
		return [FqElem(self, v) for v in range(self.q)]

	def ModulusString(self):
		"""
		Modulus as a polynomial string in x.
		"""

		deg = len(self.modulus) - 1
		terms = []
		for i,c in enumerate(self.modulus):
			e = deg - i
			if c == 0:
				continue

			if e == 0:
				terms.append("%d" % c)
			else:
				mono = "x" if e == 1 else "x^%d" % e
				terms.append(mono if c == 1 else "%d*%s" % (c, mono))

		return " + ".join(terms)

	def Serialize(self):
		"""
		Header echoed into every output payload.
		"""
		return {'q': self.q, 'p': self.p, 'm': self.m, 'modulus': self.ModulusString()}

class FqElem:
	"""
	Immutable element of F_q.
	The integer representation is sum(coords[i] * p^i) with coords taken in the power basis of the modulus.
	"""

	# FieldParams this element belongs to
	field = None

	# Integer representation in [0, q)
	value = None

	def __init__(self, field, value):
		if isinstance(value, FqElem):
			value = value.value
		value = int(value)
		if value < 0 or value >= field.q:
			raise ValueError("Element value %d out of range for F_%d" % (value, field.q))

		self.field = field
		self.value = value

	def get_coords(self):
		ret = []
		v = self.value
		for i in range(self.field.m):
			ret.append(v % self.field.p)
			v //= self.field.p
		return ret
	coords = property(get_coords, doc="Coordinates in the power basis of the modulus")

	def get_gf(self):
		return self.field.GF(self.value)
	gf = property(get_gf, doc="galois scalar for this element")

	def __int__(self):				return self.value
	def __repr__(self):				return str(self)
	def __str__(self):				return "<FqElem %d in F_%d>" % (self.value, self.field.q)

	def __eq__(self, o):
		if isinstance(o, FqElem):
			return o.field == self.field and o.value == self.value
		if isinstance(o, int):
			return self.value == o
		return NotImplemented
	def __ne__(self, o):
		r = self.__eq__(o)
		return r if r is NotImplemented else not r
	def __hash__(self):
		return hash((self.field.q, self.value))

	def __add__(self, o):			return fq_arith(self, o, 'add')
	def __sub__(self, o):			return fq_arith(self, fq_arith(o, None, 'neg'), 'add')
	def __mul__(self, o):			return fq_arith(self, o, 'mul')
	def __neg__(self):				return fq_arith(self, None, 'neg')
	def __pow__(self, n):			return fq_arith(self, n, 'pow')

	def Inverse(self):
		return fq_arith(self, None, 'inv')

	def IsZero(self):
		return self.value == 0

def fq_arith(a, b, op):
	"""
	Arithmetic in F_q: op is one of 'add', 'mul', 'neg', 'inv', 'pow'.
	For 'pow' @b is an integer exponent (negative allowed for nonzero @a); for 'neg' and 'inv' @b is ignored.
	"""

	field = a.field
	x = a.gf

	if op == 'add':
		return FqElem(field, x + _coerce(field, b))
	elif op == 'mul':
		return FqElem(field, x * _coerce(field, b))
	elif op == 'neg':
		return FqElem(field, -x)
	elif op == 'inv':
		if a.value == 0:
			raise FieldZeroDivisionError("Cannot invert zero in F_%d" % field.q)
		return FqElem(field, field.GF(1) / x)
	elif op == 'pow':
		n = int(b)
		if n < 0:
			if a.value == 0:
				raise FieldZeroDivisionError("Cannot raise zero to negative power %d in F_%d" % (n, field.q))
			return FqElem(field, (field.GF(1) / x) ** (-n))
		return FqElem(field, x ** n)
	else:
		raise ValueError("Unrecognized field operation '%s'" % op)

def _coerce(field, b):
	if isinstance(b, FqElem):
		if b.field != field:
			raise TypeError("Cannot combine elements of F_%d and F_%d" % (field.q, b.field.q))
		return b.gf
	return field.GF(int(b))

def ints(arr):
	"""
	Plain integer view of a galois array, for index arithmetic and serialization.
	"""
	return np.asarray(arr.view(np.ndarray), dtype=np.int64)
