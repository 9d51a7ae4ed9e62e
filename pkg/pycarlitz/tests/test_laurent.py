import random
import unittest

from pycarlitz.errors import DomainError, NotInvertibleError, UnsupportedOperationError
from pycarlitz.field import FieldParams
from pycarlitz.laurent import MIXED, FqPoly, LaurentSeries, agree, frobenius_twist, ls_add, ls_inv, ls_mul, ls_pow, ls_scale, ls_shift, ls_sub, monomial, one, poly_embed, series_to_poly, theta_power, truncate, useries, zero

def random_series(field, rnd, val, prec, sector=None):
	"""
	Random series with a nonzero leading coefficient; @sector restricts the exponents to one class mod q-1.
	"""

	s = field.q - 1
	arr = field.Zeros(prec - val)
	for k in range(prec - val):
		if sector is not None and (val + k - sector) % s:
			continue
		arr[k] = field.GF(rnd.randrange(field.q))
	arr[0] = field.GF(rnd.randrange(1, field.q))
	return LaurentSeries(field, val, prec, arr)

class FqPolyTests(unittest.TestCase):
	def test_trim_and_degree(self):
		F = FieldParams.Get(3)
		p = FqPoly(F, [1, 2, 0, 0])
		self.assertEqual(p.deg, 1)
		self.assertEqual(p.Serialize(), [1, 2])
		self.assertTrue(FqPoly(F, [0, 0]).IsZero())
		self.assertEqual(FqPoly(F).deg, float('-inf'))

	def test_arith(self):
		F = FieldParams.Get(5)
		a = FqPoly(F, [1, 1])
		b = FqPoly(F, [4, 1])
		# (theta+1)(theta-1) = theta^2 - 1
		self.assertEqual((a*b).Serialize(), [4, 0, 1])
		self.assertEqual((a - a).Serialize(), [])
		self.assertEqual((a ** 5), FqPoly.Monomial(F, 5) + FqPoly.Constant(F, 1))

	def test_divmod_gcd(self):
		F = FieldParams.Get(3)
		a = FqPoly(F, [1, 1])
		b = FqPoly(F, [2, 1])
		c = FqPoly(F, [0, 0, 1])
		quo,rem = (a*c + b).DivMod(c)
		self.assertEqual(quo, a)
		self.assertEqual(rem, b)

		g = (a*c).Gcd(a*b)
		self.assertEqual(g, a)
		self.assertTrue(g.IsMonic())

	def test_monic(self):
		F = FieldParams.Get(5)
		p = FqPoly(F, [1, 2, 3])
		self.assertTrue(p.Monic().IsMonic())
		self.assertRaises(NotInvertibleError, FqPoly(F).Monic)

	def test_twist(self):
		F = FieldParams.Get(3)
		p = FqPoly(F, [1, 2])
		self.assertEqual(p.Twist(1), FqPoly(F, [1, 0, 0, 2]))
		# Frobenius on F_q[theta]: p^(1) = p^q for p over F_p
		self.assertEqual(p.Twist(1), p ** 3)
		self.assertRaises(UnsupportedOperationError, p.Twist, -1)

class LaurentTests(unittest.TestCase):
	def test_normalize(self):
		F = FieldParams.Get(3)
		f = LaurentSeries(F, -2, 10, F.Array([0, 0, 1, 2]))
		self.assertEqual(f.val, 0)
		self.assertEqual(f.prec, 10)
		self.assertEqual(f.Terms(), [(0, 1), (1, 2)])

		z = LaurentSeries(F, 0, 5, F.Array([0, 0]))
		self.assertTrue(z.IsZero())
		self.assertEqual(z.val, 5)

	def test_sector(self):
		F = FieldParams.Get(4)
		self.assertEqual(monomial(F, 4, 20).sector, 1)
		self.assertEqual(theta_power(F, 2, 20).sector, 0)
		self.assertEqual(ls_add(monomial(F, 0, 20), monomial(F, 1, 20)).sector, MIXED)
		self.assertEqual(zero(F, 10).sector, None)

	def test_theta_embedding(self):
		for q in (2, 3, 5, 9):
			F = FieldParams.Get(q)
			theta = poly_embed(FqPoly.Theta(F), 30)
			self.assertEqual(theta, theta_power(F, 1, 30))
			# theta * theta^-1 = 1
			s = q - 1
			self.assertEqual(ls_mul(theta, theta_power(F, -1, 40)), one(F, min(30 + s, 40 - s)))

	def test_precision_rules(self):
		F = FieldParams.Get(3)
		rnd = random.Random(1)
		f = random_series(F, rnd, -2, 20)
		g = random_series(F, rnd, 3, 15)
		self.assertEqual(ls_add(f, g).prec, 15)
		self.assertEqual(ls_mul(f, g).prec, min(20 + 3, 15 - 2))
		self.assertEqual(ls_inv(f).prec, 20 + 4)
		self.assertEqual(ls_shift(f, 5).val, 3)

	def test_ring_identities(self):
		rnd = random.Random(7)
		for q in (2, 3, 4, 5, 9):
			F = FieldParams.Get(q)
			for trial in range(5):
				a = random_series(F, rnd, rnd.randrange(-4, 4), 40)
				b = random_series(F, rnd, rnd.randrange(-4, 4), 40)
				c = random_series(F, rnd, rnd.randrange(-4, 4), 40)

				lhs = ls_mul(a, ls_add(b, c))
				rhs = ls_add(ls_mul(a, b), ls_mul(a, c))
				self.assertGreaterEqual(agree(lhs, rhs), min(lhs.prec, rhs.prec))

				inv = ls_inv(a)
				self.assertEqual(ls_mul(a, inv), one(F, inv.prec + a.val))

	def test_sector_stride_products(self):
		# Products of pure-sector series take the strided path; compare with the mixed path
		rnd = random.Random(3)
		F = FieldParams.Get(4)
		a = random_series(F, rnd, 2, 60, sector=2)
		b = random_series(F, rnd, 0, 60, sector=0)
		m = ls_add(b, monomial(F, 59, 60))
		self.assertEqual(m.sector, MIXED)
		self.assertEqual(ls_mul(a, b).sector, 2)
		self.assertEqual(agree(ls_mul(a, b), ls_mul(a, m)), 60)

	def test_pow(self):
		rnd = random.Random(11)
		F = FieldParams.Get(5)
		a = random_series(F, rnd, 1, 30)
		self.assertEqual(ls_pow(a, 3), ls_mul(a, ls_mul(a, a)))
		self.assertEqual(ls_pow(a, -2), ls_pow(ls_inv(a), 2))
		self.assertRaises(NotInvertibleError, ls_inv, zero(F, 10))

	def test_frobenius_power(self):
		rnd = random.Random(5)
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			a = random_series(F, rnd, -1, 25)
			tw = frobenius_twist(a, 1)
			self.assertEqual(tw.prec, 25 * q)
			p = ls_pow(a, q)
			self.assertGreaterEqual(agree(tw, p), p.prec)

			self.assertEqual(frobenius_twist(a, 2, cap=40).prec, 40)
			self.assertRaises(UnsupportedOperationError, frobenius_twist, a, -1)

	def test_frobenius_ring_map(self):
		rnd = random.Random(17)
		for q in (2, 3, 4, 5):
			F = FieldParams.Get(q)
			for trial in range(4):
				a = random_series(F, rnd, rnd.randrange(-3, 3), 30)
				b = random_series(F, rnd, rnd.randrange(-3, 3), 30)
				for n in (1, 2):
					lhs = frobenius_twist(ls_add(a, b), n)
					rhs = ls_add(frobenius_twist(a, n), frobenius_twist(b, n))
					self.assertGreaterEqual(agree(lhs, rhs), min(lhs.prec, rhs.prec), "q=%d n=%d sum" % (q, n))

					lhs = frobenius_twist(ls_mul(a, b), n)
					rhs = ls_mul(frobenius_twist(a, n), frobenius_twist(b, n))
					self.assertGreaterEqual(agree(lhs, rhs), min(lhs.prec, rhs.prec), "q=%d n=%d product" % (q, n))

	def test_precision_soundness(self):
		# A result computed from truncated inputs agrees with the full one up to its own precision
		rnd = random.Random(23)
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			for trial in range(3):
				a = random_series(F, rnd, rnd.randrange(-3, 4), 60)
				b = random_series(F, rnd, rnd.randrange(-3, 4), 60)
				for P in (20, 35):
					x = truncate(a, P)
					y = truncate(b, P)
					pairs = [
						('add', ls_add(x, y), ls_add(a, b)),
						('mul', ls_mul(x, y), ls_mul(a, b)),
						('inv', ls_inv(x), ls_inv(a)),
						('pow', ls_pow(x, 3), ls_pow(a, 3)),
						('twist', frobenius_twist(x, 1), frobenius_twist(a, 1)),
					]
					for name,lo,hi in pairs:
						self.assertLessEqual(lo.prec, hi.prec, "q=%d P=%d %s" % (q, P, name))
						self.assertGreaterEqual(agree(lo, hi), lo.prec, "q=%d P=%d %s" % (q, P, name))

	def test_scale(self):
		F = FieldParams.Get(5)
		a = monomial(F, 3, 10, 2)
		self.assertEqual(ls_scale(a, 3).Terms(), [(3, 1)])
		self.assertTrue(ls_sub(a, a).IsZero())

	def test_useries(self):
		F = FieldParams.Get(3)
		u = useries(F, F.Array([1]), 1, 20)
		self.assertEqual(u, theta_power(F, -1, 20))

	def test_series_to_poly(self):
		F = FieldParams.Get(3)
		p = FqPoly(F, [2, 0, 1, 1])
		self.assertEqual(series_to_poly(poly_embed(p, 3)), p)
		self.assertRaises(DomainError, series_to_poly, monomial(F, 1, 5))
		self.assertRaises(DomainError, series_to_poly, monomial(F, -1, 5))

	def test_truncate(self):
		F = FieldParams.Get(2)
		a = ls_add(monomial(F, 0, 10), monomial(F, 5, 10))
		self.assertEqual(truncate(a, 5).Terms(), [(0, 1)])
		self.assertIs(truncate(a, 12), a)

	def test_serialize(self):
		F = FieldParams.Get(3)
		a = ls_add(monomial(F, -2, 6), monomial(F, 0, 6, 2))
		d = a.Serialize()
		self.assertEqual(list(d.keys()), ['q', 'p', 'm', 'w_def', 'val', 'prec', 'sector', 'coeffs'])
		self.assertEqual(d['coeffs'], [[-2, 1], [0, 2]])
		self.assertEqual(d['sector'], 0)
		self.assertEqual(d['w_def'], "(-theta)^(-1/(q-1))")
