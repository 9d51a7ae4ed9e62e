import unittest

from pycarlitz import Carlitz
from pycarlitz.cache import ObjectCache
from pycarlitz.config import RunConfig
from pycarlitz.field import FieldParams
from pycarlitz.laurent import FqPoly, monomial

class CacheTests(unittest.TestCase):
	def test_precision(self):
		F = FieldParams.Get(3)
		cache = ObjectCache()
		cache.Put(('x',), monomial(F, 2, 40))
		cache.Put(('x',), monomial(F, 2, 20))
		self.assertEqual(cache.Get(('x',)).prec, 40)
		self.assertEqual(cache.Get(('x',), 30).prec, 30)
		self.assertIsNone(cache.Get(('x',), 50))
		self.assertIsNone(cache.Get(('y',)))
		self.assertEqual((cache.hits, cache.misses), (2, 2))

	def test_eviction(self):
		F = FieldParams.Get(2)
		cache = ObjectCache(2)
		cache.Put('a', FqPoly(F, [1]))
		cache.Put('b', FqPoly(F, [0, 1]))

		# 'a' is now the most recently used, so 'b' goes first
		self.assertIsNotNone(cache.Get('a'))
		cache.Put('c', FqPoly(F, [1, 1]))
		self.assertEqual(len(cache), 2)
		self.assertIn('a', cache)
		self.assertNotIn('b', cache)
		self.assertEqual(cache.evictions, 1)

		cache.Clear()
		self.assertEqual(len(cache), 0)
		self.assertRaises(ValueError, ObjectCache, 0)

	def test_session_cap(self):
		c = Carlitz(cfg=RunConfig(2, caps="cache_cap=3"))
		self.assertEqual(c.cache.capacity, 3)
		for n in (1, 2, 3, 4, 5):
			c.Zeta((n,), 20)
		self.assertLessEqual(len(c.cache), 3)
		self.assertGreater(c.cache.evictions, 0)

		self.assertEqual(Carlitz(3).cache.capacity, RunConfig(3).caps['cache_cap'])
