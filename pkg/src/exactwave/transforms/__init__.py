from exactwave.base.errors import ConfigError
from exactwave.transforms.abstract_map import AbstractConformalMap
from exactwave.transforms.conformal_maps import (ComplexMap, InversionMap, ExponentialMap,
                                                 CustomConformalMap, MAP_KINDS)
from exactwave.transforms.multid import (ExactSolutionND, PlaneWave, plane_wave,
                                         PulledBackSolution, conformal_pullback,
                                         KelvinSolution, kelvin_3d)
from exactwave.transforms.reductions import (change_of_variable_1d, EPDReduction, epd_reduce,
                                             SphericalSolution, spherical_reduce,
                                             residual_spherical, cylindrical_reduce)


def map_from_dict(descriptor):
    kind = descriptor.get("kind")
    if kind not in MAP_KINDS:
        raise ConfigError(f"unknown conformal map kind {kind!r}, expected one of "
                          f"{sorted(MAP_KINDS)} or kelvin_3d")
    return MAP_KINDS[kind]()
