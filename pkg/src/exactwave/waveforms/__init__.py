from exactwave.base.errors import ConfigError
from exactwave.waveforms.abstract_waveform import AbstractWaveform, ShiftedWaveform
from exactwave.waveforms.analytic_waveforms import (GaussianWaveform, SineWaveform,
                                                    PolynomialWaveform, ZeroWaveform)
from exactwave.waveforms.compact_bump import CompactBumpWaveform
from exactwave.waveforms.custom_waveform import CustomWaveform

WAVEFORM_KINDS = {
    "gaussian": GaussianWaveform,
    "sine": SineWaveform,
    "polynomial": PolynomialWaveform,
    "compact_bump": CompactBumpWaveform,
    "zero": ZeroWaveform,
}


def waveform_from_dict(descriptor):
    """ Build a waveform from a JSON descriptor such as
    {"kind": "gaussian", "params": [center, width]}

    Custom waveforms carry code and cannot be described in JSON.
    """
    kind = descriptor.get("kind")
    if kind == "custom":
        raise ConfigError("custom waveforms cannot be built from a JSON descriptor")
    if kind == "shifted":
        return waveform_from_dict(descriptor["waveform"]).shifted(descriptor["tau"])
    if kind not in WAVEFORM_KINDS:
        raise ConfigError(f"unknown waveform kind {kind!r}, expected one of "
                          f"{sorted(WAVEFORM_KINDS)}")
    params = descriptor.get("params", [])
    try:
        return WAVEFORM_KINDS[kind](*params)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"invalid parameters {params} for waveform {kind!r}: {err}") from err


def jet_eval(waveform, s, order):
    return waveform.jet(s, order)
