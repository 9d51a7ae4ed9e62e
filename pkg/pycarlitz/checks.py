"""
Named identity checks: each one recomputes both sides independently and reports the agreement.
"""

import logging

from .errors import DomainError
from .laurent import FqPoly, agree, ls_add, ls_mul, ls_neg, ls_pow, ls_scale, poly_embed
from .relations import MiningProblem, Target, build_monomial, mine, required_prec
from .parser import Factor
from .special import AlphaTuple, IndexTuple, chang_eval, mcpl, mzv
from .bipoly import BiPoly

log = logging.getLogger(__name__)

CHECKS = ('euler-like', 'carlitz-even', 'q2-identity', 'frobenius-p', 'shuffle', 'chang')

class CheckReport:
	"""
	Outcome of a named check.
	"""

	# Check name
	name = None

	# 'pass', 'fail', 'inconclusive' or 'not-applicable'
	status = None

	# Precision the identity was required to hold to (w-units) and the agreement reached
	prec = None
	agreement = None

	# Why the check does not apply
	reason = None

	# Extra check-specific output
	detail = None

	def __init__(self, name, status, prec=None, agreement=None, reason=None, detail=None):
		self.name = name
		self.status = status
		self.prec = prec
		self.agreement = agreement
		self.reason = reason
		self.detail = detail or {}

	def get_passed(self):
		return self.status == 'pass'
	passed = property(get_passed)

	def Serialize(self):
		ret = {
			'check': self.name,
			'status': self.status,
			'prec': self.prec,
			'agreement': self.agreement,
		}
		if self.reason is not None:
			ret['reason'] = self.reason
		ret.update(self.detail)
		return ret

	def __repr__(self):				return str(self)
	def __str__(self):				return "<CheckReport %s %s>" % (self.name, self.status)

def _status(agreement, prec):
	return 'pass' if agreement >= prec else 'fail'

def _prime_power_exponent(p, n):
	"""
	Largest e with p^e | n.
	"""

	e = 0
	while n % p == 0:
		n //= p
		e += 1
	return e

def shuffle_exponent(field, n1, n2):
	"""
	Some e >= 0 with p^e | n1, n2 and n1/p^e + n2/p^e <= q, or None.
	"""

	p = field.p
	top = min(_prime_power_exponent(p, n1), _prime_power_exponent(p, n2))
	for e in range(top+1):
		if n1 // p**e + n2 // p**e <= field.q:
			return e
	return None

def euler_exponent(field, n):
	"""
	e with 2n = p^e (q-1), or None.
	"""

	m,r = divmod(2*n, field.q - 1)
	if r:
		return None
	e = _prime_power_exponent(field.p, m)
	return e if field.p**e == m else None

# --------------------------------------------------------------------------------

def check_q2_identity(field, params, prec, cfg, cache):
	if field.q != 2:
		return CheckReport('q2-identity', 'not-applicable', prec, reason="zeta(1,1) = zeta(2)/(theta^2+theta) is the q = 2 relation, q is %d" % field.q)

	cap = cfg.caps['powersum_cap']
	work = prec + 2
	lhs = ls_mul(poly_embed(FqPoly(field, [0,1,1]), work), mzv(field, (1,1), work, cap, cache))
	rhs = mzv(field, (2,), work, cap, cache)
	a = min(agree(lhs, rhs), prec)
	return CheckReport('q2-identity', _status(a, prec), prec, a, detail={'identity': "(theta^2+theta) zeta(1,1) = zeta(2)"})

def check_frobenius(field, params, prec, cfg, cache):
	n = params.get('n', 1)
	cap = cfg.caps['powersum_cap']
	p = field.p

	lhs = mzv(field, (p*n,), prec, cap, cache)
	rhs = ls_pow(mzv(field, (n,), prec, cap, cache), p)
	a = min(agree(lhs, rhs), prec)
	return CheckReport('frobenius-p', _status(a, prec), prec, a, detail={'identity': "zeta(%d) = zeta(%d)^%d" % (p*n, n, p)})

def check_shuffle(field, params, prec, cfg, cache):
	n1 = params.get('n1', 1)
	n2 = params.get('n2', 1)
	e = shuffle_exponent(field, n1, n2)
	if e is None:
		return CheckReport('shuffle', 'not-applicable', prec, reason="no e >= 0 with p^e | %d, %d and %d/p^e + %d/p^e <= %d" % (n1, n2, n1, n2, field.q))

	cap = cfg.caps['powersum_cap']
	z1 = mzv(field, (n1,), prec, cap, cache)
	z2 = mzv(field, (n2,), prec, cap, cache)
	rhs = mzv(field, (n1, n2), prec, cap, cache)
	rhs = ls_add(rhs, mzv(field, (n2, n1), prec, cap, cache))
	rhs = ls_add(rhs, mzv(field, (n1+n2,), prec, cap, cache))
	a_zeta = min(agree(ls_mul(z1, z2), rhs), prec)

	# Same product on the polylogarithms, as an identity of Tate elements
	T = params.get('tdeg', cfg.tdeg)
	one = BiPoly.Constant(field, 1)
	L1 = mcpl(AlphaTuple(field, [one], [n1]), T, prec)
	L2 = mcpl(AlphaTuple(field, [one], [n2]), T, prec)
	R = mcpl(AlphaTuple(field, [one, one], [n1, n2]), T, prec)
	R = R + mcpl(AlphaTuple(field, [one, one], [n2, n1]), T, prec)
	R = R + mcpl(AlphaTuple(field, [one], [n1+n2]), T, prec)
	P = L1 * L2
	a_tate = min([agree(P.coeffs[k], R.coeffs[k]) for k in range(T+1)] + [prec])

	a = min(a_zeta, a_tate)
	detail = {
		'identity': "zeta(%d)zeta(%d) = zeta(%d,%d) + zeta(%d,%d) + zeta(%d)" % (n1, n2, n1, n2, n2, n1, n1+n2),
		'e': e,
		'zeta_agreement': a_zeta,
		'tate_agreement': a_tate,
		'tdeg': T,
	}
	return CheckReport('shuffle', _status(a, prec), prec, a, detail=detail)

def _mine_two(field, targets, prec, cfg):
	"""
	Mine two targets at a precision that satisfies the safety margin.
	"""

	D = cfg.degree_bound
	vals = [t.val for t in targets]
	N = max(prec, required_prec(field.q, D, vals, cfg.margin))
	prob = MiningProblem.FromTargets(field, targets, D, N, cfg.margin, 'strict')
	return mine(prob)

def _mining_status(cert):
	if cert.kind != 'kernel':
		return 'inconclusive'
	return 'pass' if cert.Confirmed() else 'fail'

def _ratio_detail(cert):
	r = cert.Ratio()
	if r is None:
		return None
	return {'num': r[0].Serialize(), 'den': r[1].Serialize(), 'text': "(%s)/(%s)" % (r[0], r[1])}

def check_carlitz_even(field, params, prec, cfg, cache):
	n = params.get('n', field.q - 1)
	if n % (field.q - 1):
		return CheckReport('carlitz-even', 'not-applicable', prec, reason="%d is not \"even\": q-1 = %d does not divide it" % (n, field.q - 1))

	cap = cfg.caps['powersum_cap']
	pin = [Factor('pi', None, n)]
	zn = [Factor('zeta', (n,), 1)]
	targets = [
		_target(field, "pi^%d" % n, pin, cap, cache),
		_target(field, "zeta(%d)" % n, zn, cap, cache),
	]

	cert = _mine_two(field, targets, prec, cfg)
	detail = {'certificate': cert.Serialize(), 'ratio': _ratio_detail(cert)}
	return CheckReport('carlitz-even', _mining_status(cert), cert.N, None, detail=detail)

def check_euler_like(field, params, prec, cfg, cache):
	n = params.get('n', 1)
	e = euler_exponent(field, n)
	if e is None:
		return CheckReport('euler-like', 'not-applicable', prec, reason="2n = %d is not p^e(q-1) = %d^e*%d" % (2*n, field.p, field.q - 1))

	cap = cfg.caps['powersum_cap']

	def combo(P):
		x = ls_pow(mzv(field, (n,), P, cap, cache), 2)
		x = ls_add(x, ls_neg(ls_scale(mzv(field, (n, n), P, cap, cache), field.Prime(2))))
		return x

	a = min(agree(combo(prec), mzv(field, (2*n,), prec, cap, cache)), prec)

	pi2n = [Factor('pi', None, 2*n)]
	targets = [
		_target(field, "pi^%d" % (2*n), pi2n, cap, cache),
		Target(field, "zeta(%d)^2-2zeta(%d,%d)" % (n, n, n), None, combo),
	]
	targets[1].val = 0

	cert = _mine_two(field, targets, prec, cfg)
	status = _status(a, prec)
	if status == 'pass':
		status = _mining_status(cert)

	detail = {
		'identity': "zeta(%d)^2 - 2 zeta(%d,%d) = zeta(%d)" % (n, n, n, 2*n),
		'e': e,
		'certificate': cert.Serialize(),
		'ratio': _ratio_detail(cert),
	}
	return CheckReport('euler-like', status, prec, a, detail=detail)

def check_chang(field, params, prec, cfg, cache):
	idx = IndexTuple(params.get('tuple', (1,)))
	N = params.get('N', 0)

	res = chang_eval(field, idx, N, prec, cfg=cfg, cache=cache)
	a = min(res.agreement, prec)
	return CheckReport('chang', 'pass' if res.match else 'fail', prec, a, detail={'chang': res.Serialize()})

def _target(field, label, factors, cap, cache):
	return Target(field, label, factors, lambda P: build_monomial(field, factors, P, cap, cache))

_dispatch = {
	'euler-like': check_euler_like,
	'carlitz-even': check_carlitz_even,
	'q2-identity': check_q2_identity,
	'frobenius-p': check_frobenius,
	'shuffle': check_shuffle,
	'chang': check_chang,
}

def named_check(name, field, params=None, prec=None, cfg=None, cache=None):
	"""
	Run check @name with @params at w-precision @prec (default from @cfg).
	"""

	if name not in _dispatch:
		raise DomainError("Unknown check '%s', expected one of %s" % (name, ", ".join(CHECKS)))

	if cfg is None:
		from .config import RunConfig
		cfg = RunConfig(field.q)
	if prec is None:
		prec = cfg.WPrec()

	ret = _dispatch[name](field, dict(params or {}), prec, cfg, cache)
	log.info("check %s: %s", name, ret.status)
	return ret
