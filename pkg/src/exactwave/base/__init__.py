from exactwave.base.errors import (ExactWaveError, ContractError, DomainError, NoRootError,
                                   ConstructionError, BlowUpError, ConfigError)
from exactwave.base.jets import Jet, MAX_ORDER, jet_compose, jet_exp, jet_sin, jet_cos
