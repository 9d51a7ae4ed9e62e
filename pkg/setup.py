"""Installs pycarlitz using distutils

Run:
	python setup.py install

to install this package.
"""

try:
	from setuptools import setup
except ImportError:
	from distutils.core import setup

import sys

###############################################################################
# arguments for the setup command
###############################################################################
name = "pycarlitz"
version = "1.0.0"
desc = "Exact Carlitz zeta and multizeta values over F_q[theta]"
long_desc = "Computes Carlitz multizeta values, the Carlitz period and multiple polylogarithms as exact truncated series, verifies their period systems and mines F_q[theta]-linear relations among them"
classifiers = [
	"Intended Audience :: Science/Research",
	"Programming Language :: Python :: 3",
	"Topic :: Scientific/Engineering :: Mathematics",
]
author = "Colin M Burnett"
author_email = "cmlburnett@gmail.com"
url = "http://www.candysporks.org"
cp_license = "BSD"
packages = [
	"pycarlitz",
	"pycarlitz.encoder",
	"pycarlitz.parser",
	"pycarlitz.tests",
]
install_requires = [
	"ply",
	"galois",
	"numpy",
]
entry_points = {
	'console_scripts': [
		'pycarlitz = pycarlitz.cli:main',
	],
}
data_files = [
	('pycarlitz', [
							'pycarlitz/__init__.py',
							'pycarlitz/__main__.py',
							'pycarlitz/atpoly.py',
							'pycarlitz/bipoly.py',
							'pycarlitz/cache.py',
							'pycarlitz/checks.py',
							'pycarlitz/cli.py',
							'pycarlitz/config.py',
							'pycarlitz/errors.py',
							'pycarlitz/field.py',
							'pycarlitz/laurent.py',
							'pycarlitz/motive.py',
							'pycarlitz/relations.py',
							'pycarlitz/special.py',
							'pycarlitz/tate.py',
	]),
	('pycarlitz/encoder', [
							'pycarlitz/encoder/__init__.py',
							'pycarlitz/encoder/jsonout.py',
							'pycarlitz/encoder/textout.py',
	]),
	('pycarlitz/parser', [
							'pycarlitz/parser/__init__.py',
							'pycarlitz/parser/config.py',
							'pycarlitz/parser/expr.py',
	]),
]
scripts = []

required_python_version = (3, 6)

###############################################################################
# end arguments for setup
###############################################################################

setup_params = dict(
	name=name,
	version=version,
	description=desc,
	long_description=long_desc,
	classifiers=classifiers,
	author=author,
	author_email=author_email,
	url=url,
	license=cp_license,
	packages=packages,
	install_requires=install_requires,
	entry_points=entry_points,
	data_files=data_files,
	scripts=scripts,
	test_suite="pycarlitz.tests",
)

def main():
	if sys.version_info < required_python_version:
		s = "I'm sorry, but %s %s requires Python %s or later."
		print(s % (name, version, ".".join(str(v) for v in required_python_version)))
		sys.exit(1)

	setup(**setup_params)


if __name__ == "__main__":
    main()
