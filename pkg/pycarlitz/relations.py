"""
Mining F_q[theta]-linear relations among Laurent series.

A relation sum_j p_j(theta) v_j = 0 with deg p_j <= D is linear in the coefficients of the p_j.  Every
known w-coefficient of the combination gives one equation over F_q; the kernel of that system holds
every exact relation (truncating an exact zero gives zero), so a trivial kernel certifies that no
relation of degree <= D exists.
"""

import logging

import numpy as np

from .errors import ConfigError, DomainError
from .field import ints
from .laurent import MIXED, FqPoly, ls_add, ls_inv, ls_mul, ls_pow, one, poly_embed, truncate, zero
from .special import IndexTuple, mzv, pi_carlitz, pi_inverse

log = logging.getLogger(__name__)

class Target:
	"""
	Named monomial in pi and multizeta values that can be rebuilt at any precision.
	"""

	# FieldParams
	field = None

	# Label as typed, eg "zeta(1)^2"
	label = None

	# List of parser.Factor
	factors = None

	# Callable prec -> LaurentSeries
	builder = None

	# Valuation when known in advance, used to size the mining precision
	val = None

	def __init__(self, field, label, factors=None, builder=None):
		self.field = field
		self.label = label
		self.factors = factors
		self.builder = builder
		if factors is not None:
			self.val = monomial_valuation(field, factors)

	def Build(self, prec):
		return self.builder(prec)

	def __repr__(self):				return str(self)
	def __str__(self):				return "<Target %s>" % self.label

def monomial_valuation(field, factors):
	"""
	Valuation of a monomial: pi has valuation -q and every multizeta value valuation 0.
	"""
	return sum(-field.q * f.power for f in factors if f.kind == 'pi')

def build_monomial(field, factors, prec, cap=None, cache=None):
	"""
	Product of pi^k and zeta(...)^k factors to O(w^prec).
	"""

	q = field.q
	kp = sum(f.power for f in factors if f.kind == 'pi')
	W = prec + 2*q*(abs(kp) + 1)

	ret = one(field, W)
	for f in factors:
		if f.kind == 'pi':
			if f.power >= 0:
				x = ls_pow(pi_carlitz(field, W, cache), f.power)
			else:
				x = ls_pow(pi_inverse(field, W), -f.power)
		elif f.kind == 'zeta':
			z = mzv(field, IndexTuple(f.args), W, cap, cache)
			x = ls_pow(z, f.power) if f.power >= 0 else ls_pow(ls_inv(z), -f.power)
		else:
			raise DomainError("Unknown target factor '%s'" % f.kind)
		ret = ls_mul(ret, x)

	if ret.prec < prec:
		raise DomainError("Monomial lost precision: O(w^%d) < O(w^%d)" % (ret.prec, prec))
	return truncate(ret, prec)

def parse_targets(field, txt, cap=None, cache=None):
	"""
	Targets from an expression such as "pi^2,zeta(1)^2,zeta(1,1)".
	"""

	from .parser import ExprTokenizer

	ret = []
	for label,factors in ExprTokenizer(txt).ParseTargets():
		def builder(prec, factors=factors):
			return build_monomial(field, factors, prec, cap, cache)
		ret.append(Target(field, label, factors, builder))
	return ret

def series_target(label, series):
	"""
	Target around a fixed series; it cannot be rebuilt beyond the precision of @series.
	"""

	def builder(prec):
		if prec > series.prec:
			raise ConfigError("Target %s is only known to O(w^%d), O(w^%d) requested" % (label, series.prec, prec))
		return truncate(series, prec)
	return Target(series.field, label, None, builder)

# --------------------------------------------------------------------------------
# Mining

def required_prec(q, D, vals, margin=None):
	"""
	Smallest precision that over-determines a sector of targets with valuations @vals.
	Default (D+2)(q-1)m + 2|min val|; with @margin it is D(q-1) + (spread of vals) + margin.
	"""

	m = len(vals)
	lo = min(vals)
	if margin is None:
		return (D+2)*(q-1)*m + 2*abs(lo)
	return D*(q-1) + (max(vals) - lo) + margin

class MiningProblem:
	"""
	Targets (label, series) known to O(w^N) and a degree bound D for the coefficients.
	"""

	# FieldParams
	field = None

	# List of (label, LaurentSeries)
	targets = None

	# Degree bound and precision (w-units)
	D = None
	N = None

	# None for the default safety margin
	margin = None

	# 'split' or 'strict'
	sector_policy = 'split'

	# Optional list of Target used to confirm candidates at higher precision
	sources = None

	def __init__(self, field, targets, D, N, margin=None, sector_policy='split', sources=None):
		self.field = field
		self.targets = list(targets)
		self.D = D
		self.N = N
		self.margin = margin
		self.sector_policy = sector_policy
		self.sources = sources

		self.Validate()

	@staticmethod
	def FromTargets(field, targets, D, N, margin=None, sector_policy='split'):
		"""
		Build every Target at precision N.
		"""

		series = [(t.label, t.Build(N)) for t in targets]
		return MiningProblem(field, series, D, N, margin, sector_policy, targets)

	def Validate(self):
		if not len(self.targets):
			raise ConfigError("Mining needs at least one target")
		if self.D < 0:
			raise ConfigError("Degree bound must be >= 0, got %d" % self.D)
		if self.sector_policy not in ('split', 'strict'):
			raise ConfigError("Unknown sector policy '%s'" % self.sector_policy)

		for label,v in self.targets:
			if v.field != self.field:
				raise ConfigError("Target %s is over F_%d, not F_%d" % (label, v.field.q, self.field.q))
			if v.prec < self.N:
				raise ConfigError("Target %s is known only to O(w^%d), below the mining precision %d" % (label, v.prec, self.N))
			if v.IsZero():
				raise ConfigError("Target %s vanishes to O(w^%d)" % (label, v.prec))
			if v.sector == MIXED:
				raise ConfigError("Target %s mixes exponent classes mod %d; no F_q[theta]-relation can be read off it" % (label, self.field.q - 1))

		sectors = self.Sectors()
		if len(sectors) > 1:
			desc = "; ".join("sector %d: %s" % (s, ", ".join(self.targets[j][0] for j in idxs)) for s,idxs in sorted(sectors.items()))
			if self.sector_policy == 'strict':
				raise ConfigError("Targets lie in different sectors (%s)" % desc)
			log.warning("Targets lie in different sectors, mining each separately (%s)", desc)

		for s,idxs in sectors.items():
			vals = [self.targets[j][1].val for j in idxs]
			need = required_prec(self.field.q, self.D, vals, self.margin)
			if self.N < need:
				raise ConfigError("Precision %d is too small to over-determine sector %d at degree %d: need at least %d" % (self.N, s, self.D, need))

	def Sectors(self):
		"""
		Sector -> indices of the targets in it.
		"""

		ret = {}
		for j,(label,v) in enumerate(self.targets):
			ret.setdefault(v.sector, []).append(j)
		return ret

	def Matrix(self, idxs, sector):
		"""
		Equations for the targets @idxs: the row for w^x has entry (-1)^e coeff(v_j, x + e(q-1)) in column (j,e).
		Only x in @sector can be nonzero.
		"""

		field = self.field
		s = field.q - 1
		D = self.D

		lo = min(self.targets[j][1].val for j in idxs) - D*s
		hi = self.N - D*s
		start = lo + ((sector - lo) % s)
		rows = len(range(start, hi, s))

		A = field.Zeros((rows, len(idxs)*(D+1)))
		for jj,j in enumerate(idxs):
			v = self.targets[j][1]
			for e in range(D+1):
				col = v.Window(start + e*s, hi + e*s)[::s][:rows]
				A[:, jj*(D+1) + e] = col if e % 2 == 0 else -col
		return A

	def Serialize(self):
		return {
			'D': self.D,
			'N': self.N,
			'targets': [label for label,v in self.targets],
			'sector_policy': self.sector_policy,
			'margin': self.margin,
		}

class RelationCertificate:
	"""
	Result of mining: a kernel basis of candidate relations, or the certified absence of relations at the degree bound.
	"""

	# 'kernel' or 'none-at-bound'
	kind = None

	# Degree bound and precision
	D = None
	N = None

	# Target labels
	labels = None

	# List of coefficient vectors (lists of FqPoly), None for none-at-bound
	kernel = None

	# [(vector index, residual valuation)] at precision confirm_prec
	confirmations = None
	confirm_prec = None

	# Sector -> labels
	sectors = None

	def __init__(self, kind, D, N, labels, kernel, sectors):
		self.kind = kind
		self.D = D
		self.N = N
		self.labels = labels
		self.kernel = kernel
		self.sectors = sectors
		self.confirmations = []
		self.confirm_prec = None

	def Confirmed(self):
		"""
		True when every kernel vector was confirmed at the higher precision.
		"""

		if self.kind != 'kernel':
			return True
		if self.confirm_prec is None or len(self.confirmations) != len(self.kernel):
			return False
		return all(r >= self.confirm_prec for i,r in self.confirmations)

	def Ratio(self):
		"""
		For two targets (v_1, v_2) related by p_1 v_1 + p_2 v_2 = 0, v_2/v_1 = -p_1/p_2 as a coprime
		(numerator, denominator) pair with monic denominator.  None otherwise.
		"""

		if self.kind != 'kernel' or len(self.labels) != 2:
			return None

		p1,p2 = self.kernel[0]
		if p1.IsZero() or p2.IsZero():
			return None

		g = p1.Gcd(p2)
		num = -(p1.DivMod(g)[0])
		den = p2.DivMod(g)[0]
		lead = den.Leading()
		inv = den.field.GF(1) / lead
		return (num.Scale(inv), den.Scale(inv))

	def Serialize(self):
		ret = {
			'kind': self.kind,
			'D': self.D,
			'N': self.N,
			'targets': list(self.labels),
			'kernel': None if self.kernel is None else [[p.Serialize() for p in vec] for vec in self.kernel],
			'confirmations': [[i, r] for i,r in self.confirmations],
			'confirm_prec': self.confirm_prec,
			'sectors': dict((str(s), labels) for s,labels in sorted(self.sectors.items())),
		}

		r = self.Ratio()
		if r is not None:
			ret['ratio'] = {'of': [self.labels[1], self.labels[0]], 'num': r[0].Serialize(), 'den': r[1].Serialize()}
		return ret

	def __repr__(self):				return str(self)
	def __str__(self):
		n = 0 if self.kernel is None else len(self.kernel)
		return "<RelationCertificate %s D=%d N=%d vectors=%d>" % (self.kind, self.D, self.N, n)

def mine(problem, confirm_prec=None):
	"""
	Kernel of the relation system of @problem, one sector at a time.
	If the problem carries its Targets, each kernel vector is re-checked at @confirm_prec (default 2N).
	"""

	field = problem.field
	m = len(problem.targets)
	D = problem.D

	kernel = []
	sectors = {}
	for s,idxs in sorted(problem.Sectors().items()):
		sectors[s] = [problem.targets[j][0] for j in idxs]

		A = problem.Matrix(idxs, s)
		K = A.null_space()
		log.debug("sector %d: %d equations, %d unknowns, kernel dimension %d", s, A.shape[0], A.shape[1], K.shape[0])
		if not K.shape[0]:
			continue

		K = K.row_reduce()
		for row in K:
			if not np.any(ints(row)):
				continue

			vec = [FqPoly(field) for j in range(m)]
			for jj,j in enumerate(idxs):
				vec[j] = FqPoly(field, row[jj*(D+1):(jj+1)*(D+1)])
			kernel.append(vec)

	labels = [label for label,v in problem.targets]
	if not len(kernel):
		log.info("No relation of degree <= %d among %s at O(w^%d)", D, labels, problem.N)
		return RelationCertificate('none-at-bound', D, problem.N, labels, None, sectors)

	ret = RelationCertificate('kernel', D, problem.N, labels, kernel, sectors)
	log.info("Kernel of dimension %d among %s at degree %d", len(kernel), labels, D)

	if problem.sources is not None:
		Np = 2*problem.N if confirm_prec is None else confirm_prec
		ret.confirm_prec = Np
		for i,vec in enumerate(kernel):
			r = verify_candidate(problem.sources, vec, Np)
			ret.confirmations.append((i, r))
			if r < Np:
				log.warning("Kernel vector %d does not hold at O(w^%d): residual valuation %d", i, Np, r)
	return ret

def verify_candidate(targets, coeffs, prec):
	"""
	Valuation of sum_j coeffs[j](theta) targets[j] with every target rebuilt so the sum is known to O(w^prec).
	A value >= prec means the candidate holds to that precision.
	"""

	if len(targets) != len(coeffs):
		raise DomainError("%d coefficients for %d targets" % (len(coeffs), len(targets)))

	live = [(t,p) for t,p in zip(targets, coeffs) if not p.IsZero()]
	if not len(live):
		return prec

	field = live[0][1].field
	s = field.q - 1
	D = max(p.deg for t,p in live)

	acc = zero(field, prec)
	for t,p in live:
		v = t.Build(prec + D*s)
		pe = poly_embed(p, prec + max(0, -v.val))
		acc = ls_add(acc, truncate(ls_mul(pe, v), prec))

	log.debug("candidate residual valuation %d at O(w^%d)", acc.val, prec)
	return acc.val
