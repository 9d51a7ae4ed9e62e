"""
The period systems (Phi, Psi) with Psi^(-1) = Phi Psi.

The identity is verified in the forward form Psi = Phi^(1) Psi^(1).  Phi^(1) only involves alpha and
(t - theta^q), so no inverse twist is ever taken.
"""

import logging

from .bipoly import BiPoly, check_norm
from .errors import DomainError, InconclusiveError, UnsupportedOperationError
from .laurent import ls_add, monomial
from .special import AlphaTuple, IndexTuple, mcpl, omega_mcpl, omega_power
from .tate import TateElem, tate_add, tate_mul, tate_neg, tate_one, tate_poly, tate_truncate, tate_twist

log = logging.getLogger(__name__)

class PhiEntry:
	"""
	Entry alpha^(-1) (t - theta)^e of Phi, kept as the pair (alpha, e).
	alpha None means 1.
	"""

	# BiPoly or None
	alpha = None

	# Exponent of (t - theta)
	e = 0

	def __init__(self, alpha, e):
		self.alpha = alpha
		self.e = e

	def Twisted(self, field, n=1):
		"""
		The entry twisted n >= 1 times: alpha^(n-1) (t - theta^(q^n))^e.
		"""

		if n < 1:
			raise UnsupportedOperationError("Phi^(%d) would need alpha^(%d); verify in forward form" % (n, n-1))

		ret = BiPoly.TMinusTheta(field, n) ** self.e
		if self.alpha is not None:
			ret = ret * self.alpha.Twist(n-1)
		return ret

	def Serialize(self):
		return {'alpha': None if self.alpha is None else self.alpha.Serialize(), 'e': self.e}

	def __repr__(self):				return str(self)
	def __str__(self):
		a = "" if self.alpha is None else "(%s)^(-1)*" % self.alpha
		return "%s(t-theta)^%d" % (a, self.e)

class MotiveSystem:
	"""
	Lower triangular Phi (PhiEntry or None) and Psi (TateElem or None) of the same size.
	"""

	# FieldParams
	field = None

	# Matrices as lists of rows
	phi = None
	psi = None

	# Description echoed in reports: weights and alpha polynomials
	meta = None

	# Truncation in t and w-precision that Psi was built at
	tdeg = None
	prec = None

	def __init__(self, field, phi, psi, meta, tdeg, prec):
		self.field = field
		self.phi = phi
		self.psi = psi
		self.meta = meta
		self.tdeg = tdeg
		self.prec = prec

	def get_size(self):
		return len(self.phi)
	size = property(get_size)

	def Determinant(self):
		"""
		det Phi, exact.  Phi is lower triangular with diagonal (t - theta)^e_i.
		"""

		ret = BiPoly.Constant(self.field, 1)
		for i in range(self.size):
			ent = self.phi[i][i]
			if ent is None:
				return BiPoly(self.field)
			ret = ret * (BiPoly.TMinusTheta(self.field, 0) ** ent.e)
			if ent.alpha is not None:
				raise DomainError("Diagonal Phi entry carries an alpha")
		return ret

	def PhiTwisted(self, n=1):
		"""
		Phi^(n) as a matrix of BiPoly (None for zero entries).
		"""
		return [[None if x is None else x.Twisted(self.field, n) for x in row] for row in self.phi]

	def Serialize(self):
		return {
			'size': self.size,
			'meta': self.meta,
			'tdeg': self.tdeg,
			'prec': self.prec,
			'phi': [[None if x is None else x.Serialize() for x in row] for row in self.phi],
		}

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<MotiveSystem size=%d q=%d tdeg=%d prec=%d>" % (self.size, self.field.q, self.tdeg, self.prec)

class VerificationReport:
	"""
	Outcome of checking Psi = Phi^(1) Psi^(1) entry by entry.
	"""

	# 'pass' or 'fail'
	status = None

	# t-degree and w-precision of the certified comparison window
	tdeg = None
	prec = None

	# [[i, j, status, mismatch]] where mismatch is [k, exponent] of the lowest nonzero residual term or None
	entries = None

	def __init__(self, status, tdeg, prec, entries):
		self.status = status
		self.tdeg = tdeg
		self.prec = prec
		self.entries = entries

	def get_passed(self):
		return self.status == 'pass'
	passed = property(get_passed)

	def Failures(self):
		return [e for e in self.entries if e[2] == 'fail']

	def Serialize(self):
		return {
			'status': self.status,
			'window': {'tdeg': [0, self.tdeg], 'w_prec': self.prec},
			'entries': self.entries,
		}

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<VerificationReport %s tdeg=%d prec=%d failures=%d>" % (self.status, self.tdeg, self.prec, len(self.Failures()))

# --------------------------------------------------------------------------------
# Builders

def cushion(field, phi1):
	"""
	Precision lost multiplying by the entries of Phi^(1).
	"""

	deg = 0
	for row in phi1:
		for x in row:
			if x is not None and not x.IsZero():
				deg = max(deg, x.DegTheta())
	return (field.q - 1) * deg

def _work_prec(field, phi, prec):
	sys = MotiveSystem(field, phi, None, None, 0, 0)
	return prec + cushion(field, sys.PhiTwisted(1))

def build_depth1(field, alphas, n, tdeg, prec):
	"""
	(r+1)x(r+1) system for L_(alpha_1, n), ..., L_(alpha_r, n): first column (t-theta)^n, alpha_i^(-1)(t-theta)^n,
	ones on the rest of the diagonal.  Psi has first column Omega^n and the products Omega^n * L_(alpha_i, n).
	"""

	if n < 1:
		raise DomainError("Weight must be >= 1, got %d" % n)
	for a in alphas:
		check_norm(a, n)

	r = len(alphas)
	size = r + 1

	phi = [[None]*size for i in range(size)]
	phi[0][0] = PhiEntry(None, n)
	for i,a in enumerate(alphas):
		phi[i+1][0] = PhiEntry(a, n)
		phi[i+1][i+1] = PhiEntry(None, 0)

	work = _work_prec(field, phi, prec)
	log.debug("depth-1 system r=%d n=%d: Psi at tdeg %d, prec %d", r, n, tdeg, work)

	psi = [[None]*size for i in range(size)]
	psi[0][0] = omega_power(field, n, tdeg, work)
	for i,a in enumerate(alphas):
		# L_(alpha, n) has valuation >= -(q-1) deg_theta alpha, which the product loses
		extra = (field.q - 1) * max(a.DegTheta(), 0)
		L = mcpl(AlphaTuple(field, [a], [n]), tdeg, work + extra)
		om = omega_power(field, n, tdeg, work + extra)
		psi[i+1][0] = tate_truncate(tate_mul(om, L), prec=work)
		psi[i+1][i+1] = tate_one(field, tdeg, work)

	meta = {'kind': 'depth1', 'n': n, 'alphas': [a.Serialize() for a in alphas]}
	return MotiveSystem(field, phi, psi, meta, tdeg, work)

def build_general(field, idx, alphas, tdeg, prec):
	"""
	(d+1)x(d+1) system: Phi has diagonal (t-theta)^e_i and subdiagonal alpha_i^(-1)(t-theta)^e_i with
	e_i = n_i + ... + n_d; Psi_ij = Omega^e_j L_(alpha_j..alpha_(i-1)) = Omega^e_i (Omega^w L)(alpha_j..alpha_(i-1)).
	"""

	if not isinstance(idx, IndexTuple):
		idx = IndexTuple(idx)
	if not isinstance(alphas, AlphaTuple):
		alphas = AlphaTuple(field, alphas, idx)
	if tuple(alphas.weights) != tuple(idx.weights):
		raise DomainError("Alpha weights %s do not match index %s" % (alphas.weights, idx))

	d = idx.depth
	size = d + 1
	e = [sum(idx.weights[i:]) for i in range(size)]

	phi = [[None]*size for i in range(size)]
	for i in range(size):
		phi[i][i] = PhiEntry(None, e[i])
		if i < d:
			phi[i+1][i] = PhiEntry(alphas.polys[i], e[i])

	work = _work_prec(field, phi, prec)
	log.debug("depth-%d system %s: Psi at tdeg %d, prec %d", d, idx, tdeg, work)

	omegas = [omega_power(field, e[i], tdeg, work) for i in range(size)]
	psi = [[None]*size for i in range(size)]
	for i in range(size):
		psi[i][i] = omegas[i]
		for j in range(i):
			psi[i][j] = tate_mul(omegas[i], omega_mcpl(alphas.Sub(j, i), tdeg, work))

	meta = {'kind': 'general', 'weights': list(idx.weights), 'alphas': [a.Serialize() for a in alphas.polys]}
	return MotiveSystem(field, phi, psi, meta, tdeg, work)

# --------------------------------------------------------------------------------
# Verification

def _lowest(f):
	"""
	(k, exponent) of the lowest nonzero coefficient of a Tate element, or None.
	"""

	best = None
	for k,c in enumerate(f.coeffs):
		if not c.IsZero() and (best is None or c.val < best[1]):
			best = (k, c.val)
	return best

def verify(sys, strict=True):
	"""
	Check Psi = Phi^(1) Psi^(1) on t^0..t^tdeg to the certified precision.
	Raises InconclusiveError when nothing is left to compare (unless @strict is False, then the
	report status is 'inconclusive').
	"""

	field = sys.field
	phi1 = sys.PhiTwisted(1)
	cap = sys.prec
	size = sys.size

	twisted = [[None if x is None else tate_twist(x, 1, cap) for x in row] for row in sys.psi]

	residuals = {}
	lo = None
	for i in range(size):
		for j in range(i+1):
			rhs = None
			for k in range(j, i+1):
				if phi1[i][k] is None or twisted[k][j] is None:
					continue
				term = tate_mul(tate_poly(phi1[i][k], sys.tdeg, cap), twisted[k][j])
				rhs = term if rhs is None else tate_add(rhs, term)

			lhs = sys.psi[i][j]
			res = tate_add(lhs, tate_neg(rhs))
			residuals[(i,j)] = res

			for side in (lhs, rhs):
				low = _lowest(side)
				if low is not None and (lo is None or low[1] < lo):
					lo = low[1]

	prec = min(r.Prec() for r in residuals.values())
	if lo is None or lo >= prec:
		msg = "Comparison window is empty: every tracked coefficient vanishes below O(w^%d)" % prec
		if strict:
			raise InconclusiveError(msg)
		log.warning(msg)
		return VerificationReport('inconclusive', sys.tdeg, prec, [])

	entries = []
	status = 'pass'
	for i in range(size):
		for j in range(size):
			if j > i:
				entries.append([i, j, 'pass', None])
				continue

			r = residuals[(i,j)]
			low = _lowest(r)
			if low is None:
				entries.append([i, j, 'pass', None])
			else:
				entries.append([i, j, 'fail', [low[0], low[1]]])
				status = 'fail'

	log.info("Psi = Phi^(1) Psi^(1) for %s: %s (t^0..t^%d, O(w^%d))", sys.meta, status, sys.tdeg, prec)
	return VerificationReport(status, sys.tdeg, prec, entries)

def fixed_by_twist(sys, i):
	"""
	True when Phi_ii = 1 and nothing below it in column i: a constant added anywhere in row i of Psi
	is then fixed by the twist and cancels out of every residual.
	"""

	ent = sys.phi[i][i]
	if ent is None or ent.e != 0 or ent.alpha is not None:
		return False
	return all(sys.phi[x][i] is None for x in range(i+1, sys.size))

def corrupt(sys, i, j, k, e, c=1):
	"""
	Copy of @sys with c*w^e added to the t^k coefficient of Psi_ij.
	Verification detects the change when e is prime to q, and for e = 0 when Phi_ii is a positive power of
	(t - theta).  e = 0 on a row fixed by the twist (see fixed_by_twist) is refused.
	"""

	if e < 0:
		raise DomainError("Corruption exponent must be >= 0, got %d" % e)
	if j > i:
		raise DomainError("Psi is lower triangular; entry (%d,%d) is structurally zero" % (i, j))
	if e == 0 and fixed_by_twist(sys, i):
		raise DomainError("A constant added to Psi_%d%d is fixed by the twist: Phi_%d%d = 1 with nothing below it, so use e >= 1" % (i, j, i, i))

	f = sys.psi[i][j]
	if k > f.tdeg:
		raise DomainError("t^%d is beyond the truncation order %d" % (k, f.tdeg))
	if e >= f.coeffs[k].prec:
		raise DomainError("w^%d is beyond the precision O(w^%d) of the coefficient" % (e, f.coeffs[k].prec))

	if c < 1 or c >= sys.field.q:
		raise DomainError("Corruption coefficient must be a nonzero element of F_%d, got %d" % (sys.field.q, c))

	coeffs = list(f.coeffs)
	coeffs[k] = ls_add(coeffs[k], monomial(sys.field, e, coeffs[k].prec, c))

	psi = [list(row) for row in sys.psi]
	psi[i][j] = TateElem(sys.field, coeffs, f.tail)
	return MotiveSystem(sys.field, sys.phi, psi, sys.meta, sys.tdeg, sys.prec)

