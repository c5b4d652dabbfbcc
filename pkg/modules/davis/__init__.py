from .cells import Cell, SigmaComplex, build_sigma, cell_boundary
from .chamber import Chamber, build_chamber
from .ruins import Ruin, build_ruin, pseudomanifold_check, star_reduction_check
