"""
Object cache used to avoid recomputing power sums, multizeta values, the period and AT polynomials.
"""

import collections
import logging

from .laurent import LaurentSeries, truncate
from .tate import TateElem, tate_truncate

log = logging.getLogger(__name__)

class ObjectCache:
	"""
	Maps keys such as ('mzv', q, (1,1)) to the most precise object computed so far.
	Series are returned truncated to the requested precision; exact objects are returned as is.
	Holds at most @capacity objects, dropping the least recently used one first.
	"""

	# Key -> object, least recently used first
	objects = None

	# Maximum number of objects (None for no limit)
	capacity = None

	# Hit/miss/eviction counters
	hits = 0
	misses = 0
	evictions = 0

	def __init__(self, capacity=None):
		if capacity is not None and capacity < 1:
			raise ValueError("Cache capacity must be >= 1, got %d" % capacity)

		self.objects = collections.OrderedDict()
		self.capacity = capacity
		self.hits = 0
		self.misses = 0
		self.evictions = 0

	def Get(self, key, prec=None, tdeg=None):
		"""
		Get object under @key if it is known to at least @prec (and t-degree @tdeg for Tate elements).
		Returns None on a miss.
		"""

		if key not in self.objects:
			self.misses += 1
			return None

		o = self.objects[key]
		if isinstance(o, LaurentSeries):
			if prec is not None and o.prec < prec:
				self.misses += 1
				return None
			ret = o if prec is None else truncate(o, prec)

		elif isinstance(o, TateElem):
			if (prec is not None and o.Prec() < prec) or (tdeg is not None and o.tdeg < tdeg):
				self.misses += 1
				return None
			ret = tate_truncate(o, tdeg, prec)

		else:
			ret = o

		self.hits += 1
		self.objects.move_to_end(key)
		return ret

	def Put(self, key, o):
		"""
		Store @o unless something more precise is already cached under @key.
		"""

		old = self.objects.get(key)
		if isinstance(old, LaurentSeries) and isinstance(o, LaurentSeries) and old.prec >= o.prec:
			return
		if isinstance(old, TateElem) and isinstance(o, TateElem) and old.Prec() >= o.Prec() and old.tdeg >= o.tdeg:
			return

		log.debug("cache put %s", key)
		self.objects[key] = o
		self.objects.move_to_end(key)

		while self.capacity is not None and len(self.objects) > self.capacity:
			k,v = self.objects.popitem(last=False)
			self.evictions += 1
			log.debug("cache evict %s", k)

	def Clear(self):
		self.objects.clear()

	def __len__(self):				return len(self.objects)
	def __contains__(self, key):	return key in self.objects
