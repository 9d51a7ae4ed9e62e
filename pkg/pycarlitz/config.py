"""
Run configuration: built-in defaults, then a key = value config file, then command-line flags.
"""

import logging
import os

from .errors import ConfigError, ParseError
from .field import FieldParams

log = logging.getLogger(__name__)

# Environment variable naming the default config file
CONFIG_ENV = "PYCARLITZ_CONFIG"

# Largest degree i for which S_i(n) is enumerated, by field order
POWERSUM_CAPS = {2: 12, 3: 8, 4: 6, 5: 6}

FORMATS = ('text', 'json')
SECTOR_POLICIES = ('split', 'strict')

def default_caps(q):
	"""
	Enumeration limits for F_q.
	"""

	if q in POWERSUM_CAPS:
		ps = POWERSUM_CAPS[q]
	elif q <= 9:
		ps = 4
	else:
		ps = 3

	return {
		'powersum_cap': ps,
		'oracle_cap': 200000,
		'at_tdeg_max': 6,
		'at_fit': 3,
		'at_check': 4,
		'tdeg_cap': 256,
		'cache_cap': 4096,
	}

def parse_caps(txt):
	"""
	Parses "powersum_cap=6,oracle_cap=1000" into a dictionary of ints.
	"""

	ret = {}
	for part in txt.split(','):
		part = part.strip()
		if not len(part):
			continue
		if '=' not in part:
			raise ParseError("Cap '%s' is not of the form key=value" % part)

		k,v = part.split('=', 1)
		k = k.strip().replace('-', '_')
		try:
			ret[k] = int(v)
		except ValueError:
			raise ParseError("Cap '%s' needs an integer value, got '%s'" % (k, v.strip()))
	return ret

class RunConfig:
	"""
	Everything a computation needs besides its own arguments.
	Precision is given in theta^-1 units and converted to w-units with WPrec().
	"""

	# Field order and its parameters
	q = 2
	field = None

	# Precision in theta^-1 units
	precision = 40

	# Truncation order in t
	tdeg = 16

	# Degree bound for relation mining
	degree_bound = 4

	# Enumeration caps (see default_caps)
	caps = None

	# 'text' or 'json'
	format = 'text'

	# 'split' mines each sector separately, 'strict' rejects targets in several sectors
	sector_policy = 'split'

	# Overrides the default mining safety margin when set
	margin = None

	# Number of -v flags
	verbosity = 0

	# Config file that was read, if any
	source = None

	def __init__(self, q=2, **kw):
		self.SetField(q)

		for k,v in kw.items():
			self.Set(k, v)

		self.Validate()

	def SetField(self, q):
		self.q = int(q)
		self.field = FieldParams.Get(self.q)
		self.caps = default_caps(self.q)

	def Set(self, k, v):
		"""
		Set one option from a string or int; used for both the config file and flags.
		"""

		k = k.replace('-', '_')
		if k == 'prec':
			k = 'precision'
		elif k == 'deg':
			k = 'degree_bound'

		if v is None:
			return

		if k == 'q':
			# Resets the caps to the defaults of the new field
			self.SetField(_int(k, v))
		elif k in ('precision', 'tdeg', 'degree_bound', 'verbosity'):
			setattr(self, k, _int(k, v))
		elif k == 'margin':
			self.margin = _int(k, v)
		elif k == 'format':
			self.format = str(v).strip()
		elif k == 'sector_policy':
			self.sector_policy = str(v).strip()
		elif k == 'caps':
			self.caps.update(parse_caps(v) if isinstance(v, str) else dict(v))
		elif k in self.caps:
			self.caps[k] = _int(k, v)
		else:
			raise ConfigError("Unknown configuration key '%s'" % k)

	def Validate(self):
		if self.precision < 1:
			raise ConfigError("Precision must be >= 1, got %d" % self.precision)
		if self.tdeg < 0:
			raise ConfigError("t-degree must be >= 0, got %d" % self.tdeg)
		if self.degree_bound < 0:
			raise ConfigError("Degree bound must be >= 0, got %d" % self.degree_bound)
		if self.format not in FORMATS:
			raise ConfigError("Output format must be one of %s, got '%s'" % (", ".join(FORMATS), self.format))
		if self.sector_policy not in SECTOR_POLICIES:
			raise ConfigError("Sector policy must be one of %s, got '%s'" % (", ".join(SECTOR_POLICIES), self.sector_policy))
		if self.margin is not None and self.margin < 0:
			raise ConfigError("Mining margin must be >= 0, got %d" % self.margin)

		for k,v in self.caps.items():
			if k not in default_caps(self.q):
				raise ConfigError("Unknown cap '%s'" % k)
			low = 0 if k == 'at_tdeg_max' else 1
			if v < low:
				raise ConfigError("Cap '%s' must be >= %d, got %d" % (k, low, v))

	def WPrec(self):
		"""
		Precision in w-units.
		"""
		return self.precision * (self.q - 1)

	@staticmethod
	def Load(flags=None, path=None, environ=None):
		"""
		Resolve defaults < config file < flags.
		@flags is a dictionary of option values (None means not given).
		The config file is @path, else $PYCARLITZ_CONFIG, else none.
		"""

		flags = dict(flags or {})
		environ = os.environ if environ is None else environ
		if path is None:
			path = environ.get(CONFIG_ENV) or None

		filevals = {}
		if path is not None:
			filevals = read_config_file(path)

		# Field order goes first since the default caps depend on it
		q = flags.get('q')
		if q is None:
			q = filevals.get('q', RunConfig.q)

		ret = RunConfig.__new__(RunConfig)
		ret.SetField(_int('q', q))
		ret.source = path

		for k,v in filevals.items():
			if k != 'q':
				ret.Set(k, v)
		for k,v in flags.items():
			if k != 'q':
				ret.Set(k, v)

		ret.Validate()
		log.debug("Configuration: %s", ret.Serialize())
		return ret

	def Serialize(self):
		"""
		Header echoed into every payload.
		"""

		ret = self.field.Serialize()
		ret['precision'] = self.precision
		ret['w_precision'] = self.WPrec()
		ret['tdeg'] = self.tdeg
		ret['degree_bound'] = self.degree_bound
		ret['caps'] = dict(sorted(self.caps.items()))
		ret['sector_policy'] = self.sector_policy
		ret['margin'] = self.margin
		return ret

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<RunConfig q=%d prec=%d tdeg=%d deg=%d format=%s>" % (self.q, self.precision, self.tdeg, self.degree_bound, self.format)

def _int(k, v):
	try:
		return int(v)
	except (TypeError, ValueError):
		raise ConfigError("Option '%s' needs an integer, got '%s'" % (k, v))

def read_config_file(path):
	"""
	Read a key = value file into a dictionary of strings.
	"""

	from .parser import ConfigTokenizer

	try:
		with open(path, 'r') as f:
			txt = f.read()
	except OSError as e:
		raise ConfigError("Cannot read config file '%s': %s" % (path, e.strerror))

	log.info("Reading config file %s", path)
	return ConfigTokenizer(txt).Parse()
