"""Linking numbers, translation-commutative quandles and nilpotent link groups."""

from .coloring import (FiniteQuandle, check_axioms, count_homs_bruteforce,
                       count_homs_tc_fixedpoint, count_homs_tc_propagate,
                       hn_predicted, is_tc, read_table, xn)
from .diagram import (LinkDiagram, Passage, arc_table, fuzz, parse, r1_insert,
                      r2_insert, read_links, serialize)
from .errors import (CapExceeded, DiagramError, LinkQuandleError,
                     NotTranslationCommutative, PreconditionError)
from .groups import (GroupPresentation, nilpotent3, render, saktra_condition,
                     wirtinger)
from .lattice import INFINITE, LatticeBasis, contains, hnf, index, lattice_equal
from .linking import (LinkingGraph, LinkingMatrix, articulation_points,
                      connected_components, inseparable_sublinks,
                      is_classical_consistent, is_inseparable, linking_graph,
                      linking_matrix)
from .tcquandle import (IsoCertificate, LinkFamilyRows, SubgroupFamily,
                        canonical_form, extract_structure, family_from_linking,
                        materialize, qs_isomorphic_general, qs_isomorphic_pm,
                        tc_isomorphic_classical)

__version__ = "0.1.0"
