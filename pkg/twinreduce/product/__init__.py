# -*- coding: utf-8 -*-

"""
Graphs in strong products with a path: certificates and the reduction
sequences built from them
"""

from .structure import strong_product
from .structure import is_path_graph
from .structure import s_label
from .structure import s_key
from .structure import s_distance
from .structure import s_template_adjacent
from .structure import s_group_size
from .structure import RootedDecomposition
from .structure import ProductCertificate
from .structure import validate_certificate
from .structure import grid_certificate
from .structure import path_certificate

from .builder import width_bounds
from .builder import ProductSequence
from .builder import product_path_sequence
from .builder import apex_product_sequence
from .builder import power_sequence
from .builder import check_sequence_bounds

__all__ = [
	'strong_product',
	'is_path_graph',
	's_label',
	's_key',
	's_distance',
	's_template_adjacent',
	's_group_size',
	'RootedDecomposition',
	'ProductCertificate',
	'validate_certificate',
	'grid_certificate',
	'path_certificate',
	'width_bounds',
	'ProductSequence',
	'product_path_sequence',
	'apex_product_sequence',
	'power_sequence',
	'check_sequence_bounds',
]
