# -*- coding: utf-8 -*-

"""
Trigraphs, contraction and reduction sequences
"""

from .trigraph import Trigraph
from .trigraph import contract
from .trigraph import complement

from .sequence import ReductionSequence
from .sequence import canonical_partition
from .sequence import validate_partition
from .sequence import trigraph_of_partition
from .sequence import replay
from .sequence import partitions
from .sequence import sequence_profile
from .sequence import sequence_width
from .sequence import witness_bandwidth
from .sequence import restrict_sequence

__all__ = [
	'Trigraph',
	'contract',
	'complement',
	'ReductionSequence',
	'canonical_partition',
	'validate_partition',
	'trigraph_of_partition',
	'replay',
	'partitions',
	'sequence_profile',
	'sequence_width',
	'witness_bandwidth',
	'restrict_sequence',
]
