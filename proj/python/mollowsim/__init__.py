"""Spatial interference of strongly driven two-level emitters in a
structured electromagnetic reservoir.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (  # noqa: F401
    BandId,
    BlochCoefficients,
    BlochState,
    CollectiveCoupling,
    CollectivePopulations,
    CouplingModel,
    DressedFrame,
    DriveParams,
    FringeScan,
    Geometry,
    PhotonStatistics,
    ReservoirProfile,
    ValidityReport,
    VisibilitySet,
    __version__,
    array_factor,
    band_frequency,
    band_intensity_two_atom,
    brute_force_chain,
    chain_intensity,
    coefficients,
    coefficients_from_rates,
    collective_chi,
    default_step,
    detection_phase,
    detection_phase_at,
    dressed_frame,
    eta,
    eta_visibility_closed_form,
    evolve,
    expm_propagate,
    fringe_scan,
    g2_band,
    g2_weak_field,
    photon_statistics_class,
    populations_from_xyz,
    steady_state,
    steady_state_closed_form,
    validity_check,
    visibilities,
    xyz_from_populations,
)
