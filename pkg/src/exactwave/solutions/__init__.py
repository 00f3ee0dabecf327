from exactwave.solutions.exact_solution import (ExactSolution1D, CharacteristicSolution,
                                               CombinedSolution, TimeShiftedSolution)
from exactwave.solutions.builders import (RankSolutionSpec, build_rank0, build_rank1,
                                          build_solution, check_consistency)
from exactwave.solutions.residuals import residual_1d, residual_norms
