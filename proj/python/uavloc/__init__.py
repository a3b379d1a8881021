"""Monte Carlo estimation of the localizability of cellular-connected UAVs.

The heavy lifting lives in the compiled ``_core`` module; this package just
re-exports its public surface.
"""

from ._core import (
    ChannelParams,
    ConfigError,
    GainResult,
    NetworkLayout,
    PbEstimate,
    PbGrid,
    RadioParams,
    SimConfig,
    Site,
    __version__,
    build_hex_layout,
    estimate_pb,
    estimate_pb_grid,
    los_probability,
    noise_power_dbm,
    path_loss_los_db,
    path_loss_nlos_db,
    required_processing_gain,
    shadowing_std_db,
    wilson_interval,
)

__all__ = [
    "ChannelParams",
    "ConfigError",
    "GainResult",
    "NetworkLayout",
    "PbEstimate",
    "PbGrid",
    "RadioParams",
    "SimConfig",
    "Site",
    "__version__",
    "build_hex_layout",
    "estimate_pb",
    "estimate_pb_grid",
    "los_probability",
    "noise_power_dbm",
    "path_loss_los_db",
    "path_loss_nlos_db",
    "required_processing_gain",
    "shadowing_std_db",
    "wilson_interval",
]
