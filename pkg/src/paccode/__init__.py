"""PAC codes, their cyclic-shift equivalent form, exact weight spectra,
and Fano-decoder simulation."""

__version__ = "0.1.0"
