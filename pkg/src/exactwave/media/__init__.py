import numpy as np

from exactwave.base.errors import ConfigError, ConstructionError, DomainError
from exactwave.media.abstract_profile import AbstractProfile
from exactwave.media.analytic_profiles import (ConstantProfile, PowerLawProfile,
                                               QuadraticProfile, GenEulerProfile)
from exactwave.media.riccati_profile import RiccatiProfile
from exactwave.media.custom_profiles import CustomProfile, CylindricalProfile
from exactwave.riccati import ClosedFormFamily

PROFILE_KEYS = {
    "constant": {"speed"},
    "power_law": {"alpha"},
    "quadratic": {"m1", "m2"},
    "gen_euler": {"s1", "s2", "c1", "c2"},
    "riccati_implicit": {"family", "b", "y_bracket"},
    "custom": {"poly", "domain"},
    "cylindrical": {"radial"},
}


def _bound(value, default):
    return default if value is None else float(value)


def profile_from_dict(descriptor):
    """ Build a profile from a JSON descriptor such as
    {"kind": "gen_euler", "s1": 0, "s2": 1, "c1": 1, "c2": 0, "base": 1.0}

    Infinite domain bounds of custom profiles are written as null.
    """
    kind = descriptor.get("kind")
    if kind not in PROFILE_KEYS:
        raise ConfigError(f"unknown profile kind {kind!r}, expected one of "
                          f"{sorted(PROFILE_KEYS)}")
    unknown = set(descriptor) - PROFILE_KEYS[kind] - {"kind", "base"}
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)} for profile kind {kind!r}")
    args = {k: v for k, v in descriptor.items() if k != "kind"}
    try:
        if kind == "constant":
            return ConstantProfile(**args)
        if kind == "power_law":
            return PowerLawProfile(**args)
        if kind == "quadratic":
            return QuadraticProfile(**args)
        if kind == "gen_euler":
            return GenEulerProfile(**args)
        if kind == "riccati_implicit":
            family = ClosedFormFamily(args["family"], args.get("b"))
            return RiccatiProfile(family, args["y_bracket"], base=args.get("base"))
        if kind == "custom":
            lo, hi = args.get("domain", [None, None])
            return CustomProfile.from_polynomial(args["poly"],
                                                 domain=(_bound(lo, -np.inf), _bound(hi, np.inf)),
                                                 base=args.get("base"))
        if "base" in args:
            raise ConfigError("the base of a cylindrical profile is set on its radial profile")
        return CylindricalProfile(profile_from_dict(args["radial"]))
    except (DomainError, ConstructionError):
        raise
    except (TypeError, KeyError, ValueError) as err:
        raise ConfigError(f"invalid {kind!r} profile descriptor {descriptor}: {err}") from err


def laplace_invariant(profile, x):
    return profile.laplace_invariant(x)


def travel_time(profile, x):
    return profile.travel_time(x)


def characteristics(profile, t, x):
    return profile.characteristics(t, x)


def profile_jet(profile, x):
    return profile.jet(x, 2)
