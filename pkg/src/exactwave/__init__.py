__version__ = "0.1.0"

from exactwave.base.jets import Jet
from exactwave.media import (ConstantProfile, PowerLawProfile, QuadraticProfile, GenEulerProfile,
                             RiccatiProfile, CustomProfile, CylindricalProfile, profile_from_dict)
from exactwave.riccati import RiccatiParams, ClosedFormFamily, integrate_ode, integrate_family
from exactwave.solutions import RankSolutionSpec, build_rank0, build_rank1, build_solution
from exactwave.waveforms import (GaussianWaveform, SineWaveform, PolynomialWaveform,
                                 CompactBumpWaveform, CustomWaveform, waveform_from_dict)
