"""Scattering-circuit quantum multimeter simulator.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BlochVector,
    EigenPair,
    EigenScanResult,
    FingerprintAlphabet,
    FingerprintReport,
    NoiseConfig,
    PhaseGateSettings,
    PreparationRecipe,
    PreparationStep,
    PreparedState,
    QubitState,
    ScatteringOutcome,
    ShotResult,
    TomographyResult,
    amplified_accept_rate,
    build_alphabet,
    classical_baseline,
    dephase_z,
    depolarize,
    eigen,
    eigen_scan,
    fredkin,
    from_bloch,
    full_report,
    hadamard,
    overlap,
    overlap_experiment,
    phase_gate,
    prepare,
    prepare_angles,
    purity_experiment,
    purity_length,
    referee_compare,
    rotation,
    run_closed_form,
    run_command,
    run_full,
    sample,
    to_bloch,
    tomography,
    uhlmann_fidelity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
