from exactwave.numeric.report import ResidualReport
from exactwave.numeric.grids import Grid1D, Grid2D
from exactwave.numeric.stencils import fd_residual, point_residual, fd_residual_study
from exactwave.numeric.leapfrog import LeapfrogResult, leapfrog_solve
from exactwave.numeric.convergence import orders_from_errors, convergence_study
