# -*- coding: utf-8 -*-

import sys

from twinreduce.cli import main

# python -m twinreduce (info prints the version block)
if __name__ == '__main__':
	sys.exit(main())
