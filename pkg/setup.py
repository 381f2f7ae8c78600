# -*- coding: utf-8 -*-

import os
from setuptools import setup
from setuptools import find_packages

from VERSION import PROJECT
from VERSION import COPYRIGHT
from VERSION import AUTHOR
from VERSION import TITLE
from VERSION import LICENSE
from VERSION import RELEASE_STRING

cwd = os.path.dirname(__file__)


def read_all(file_name):
	fullname = os.path.join(cwd, file_name)
	with open(fullname) as f:
		return f.read()


def rewrite_version():
	with open('VERSION.py', 'r') as inp:
		txt = inp.read()
	outname = os.path.join('twinreduce', 'version.py')
	with open(outname, 'w') as out:
		out.write(txt)


rewrite_version()


setup(
	name=TITLE,
	version=RELEASE_STRING,
	license=LICENSE,
	author=AUTHOR,
	description=PROJECT,
	long_description=read_all('README.md'),
	long_description_content_type='text/markdown',
	keywords='twin-width, reduced bandwidth, contraction sequence, trigraph, graph product structure',
	packages=find_packages(
		include=['twinreduce', 'twinreduce.*'],
		exclude=['*_test*'],
	),
	zip_safe=True,

	platforms='any',
	classifiers=[
		'Development Status :: 3 - Alpha',
		'Intended Audience :: Science/Research',
		'Environment :: Console',
		'License :: OSI Approved :: ISC License (ISCL)',
		'Operating System :: OS Independent',
		'Programming Language :: Python',
		'Programming Language :: Python :: 3',
		'Programming Language :: Python :: 3.8',
		'Programming Language :: Python :: 3.9',
		'Programming Language :: Python :: 3.10',
		'Programming Language :: Python :: 3.11',
		'Programming Language :: Python :: Implementation :: CPython',
		'Topic :: Scientific/Engineering :: Mathematics',
	],
	test_suite='pytest',

	python_requires='>=3.8',
	install_requires=[
		'six             >=1.10.0',
		'pydash          >=4.1.0',
		'arrow           >=0.10.0',
		'networkx        >=2.6',
	],

	entry_points='''
		[console_scripts]
		twinreduce=twinreduce.cli:main
	'''
)
