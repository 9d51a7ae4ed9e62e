import unittest

from pycarlitz import Carlitz
from pycarlitz.atpoly import anderson_thakur, deg_theta_bound, interpolation_targets
from pycarlitz.bipoly import check_norm
from pycarlitz.cache import ObjectCache
from pycarlitz.errors import DomainError, SearchExhaustedError
from pycarlitz.field import FieldParams

class ATPolyTests(unittest.TestCase):
	def test_one(self):
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			for n in range(1, q+1):
				self.assertTrue(anderson_thakur(F, n).IsOne(), "q=%d n=%d" % (q, n))
		self.assertRaises(DomainError, anderson_thakur, F, 0)

	def test_bound(self):
		self.assertEqual(deg_theta_bound(2, 3), 5)
		self.assertEqual(deg_theta_bound(3, 4), 5)

	def test_interpolation(self):
		for q,n in [(2, 3), (3, 4)]:
			F = FieldParams.Get(q)
			at = anderson_thakur(F, n)
			self.assertFalse(at.IsOne())
			self.assertTrue(check_norm(at.h, n))
			self.assertGreaterEqual(at.checked, 3)

			targets = interpolation_targets(F, n, 3)
			for i in range(4):
				self.assertEqual(at.h.EvalTwisted(i), targets[i], "q=%d n=%d i=%d" % (q, n, i))

	def test_q2_weight3(self):
		# Gamma_3 = theta^2 + theta pins down H(theta, theta)
		F = FieldParams.Get(2)
		at = anderson_thakur(F, 3)
		self.assertEqual(at.h.EvalTwisted(0).Serialize(), [0, 1, 1])
		self.assertGreaterEqual(at.h.DegT(), 1)
		self.assertEqual(at.Serialize()['checked'], list(range(at.checked + 1)))

	def test_exhausted(self):
		F = FieldParams.Get(2)
		with self.assertRaises(SearchExhaustedError) as ctx:
			anderson_thakur(F, 3, tdeg_max=0)
		self.assertEqual(ctx.exception.bounds['deg_t'], [0, 0])

	def test_cache(self):
		F = FieldParams.Get(2)
		cache = ObjectCache()
		a = anderson_thakur(F, 3, cache=cache)
		b = anderson_thakur(F, 3, cache=cache)
		self.assertIs(a, b)

	def test_series_identity(self):
		c = Carlitz(2)
		for i in range(3):
			lhs,rhs,a = c.ATSeriesCheck(3, i, 100)
			self.assertGreaterEqual(a, 100, "i=%d" % i)
