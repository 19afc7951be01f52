"""Monte Carlo FER/ANV campaigns, spectrum runs, and verification runs,
with reproducible CSV emission."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from . import __version__
from .channel import ChannelConfig, RngStream, llr, modulate, transmit
from .codec import PacCode, pac_encode
from .conv import parse_octal
from .cyclic import (
    VerifyReport,
    verify_equivalence,
    verify_prop1,
    verify_theorem,
)
from .fano import DecoderConfig, fano_decode
from .gf2 import BitVec
from .polar import PolarDim, load_profile, rm_profile
from .spectrum import min_distance, spectrum_csv_lines, weight_spectrum

FER_CSV_HEADER = "ebn0_db,trials,frame_errors,fer,mean_anv,timeouts,wall_seconds,seed"


class ConfigError(ValueError):
    """Invalid simulation configuration."""


@dataclass
class SimConfig:
    """Everything a campaign needs: code, channel, decoder, stopping rule."""

    n: int
    k: Optional[int] = None
    profile_file: Optional[str] = None
    poly: str = "1"
    ebn0_db: List[float] = field(default_factory=list)
    master_seed: int = 1
    delta: float = 2.0
    bias: Optional[float] = None
    max_visits: Optional[int] = None
    llr_domain: str = "exact"
    min_errors: int = 100
    max_trials: int = 10_000_000

    def validate(self) -> None:
        if self.n is None or self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if (self.k is None) == (self.profile_file is None):
            raise ConfigError("exactly one of k (RM profile) or profile_file is required")
        if self.min_errors < 1:
            raise ConfigError(f"min_errors must be >= 1, got {self.min_errors}")
        if self.max_trials < self.min_errors:
            raise ConfigError(
                f"max_trials {self.max_trials} < min_errors {self.min_errors}"
            )

    @classmethod
    def from_json(cls, path: str) -> "SimConfig":
        try:
            data = json.loads(open(path).read())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        unknown = set(data) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def build_code(self) -> PacCode:
        dim = PolarDim(self.n)
        try:
            poly = parse_octal(self.poly)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.profile_file is not None:
            profile = load_profile(self.profile_file)
            if profile.dim != dim:
                raise ConfigError(
                    f"profile N={profile.dim.N} does not match --n {self.n}"
                )
        else:
            if not 1 <= self.k <= dim.N:
                raise ConfigError(f"k {self.k} out of range 1..{dim.N}")
            profile = rm_profile(dim, self.k)
        try:
            return PacCode(dim, profile, poly)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def decoder_config(self) -> DecoderConfig:
        return DecoderConfig(
            delta=self.delta,
            bias=self.bias,
            max_visits=self.max_visits,
            llr_domain=self.llr_domain,
        )

    def resolved(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SimResultRow:
    ebn0_db: float
    trials: int
    frame_errors: int
    fer: float
    mean_anv: float
    timeouts: int
    wall_seconds: float
    seed: int

    def csv(self) -> str:
        return (
            f"{self.ebn0_db:g},{self.trials},{self.frame_errors},"
            f"{self.fer:.10g},{self.mean_anv:.6f},{self.timeouts},"
            f"{self.wall_seconds:.3f},{self.seed}"
        )


def _config_comment(cfg_dict: dict) -> str:
    return f"# paccode {__version__} config={json.dumps(cfg_dict, sort_keys=True)}"


def run_fer(cfg: SimConfig) -> List[SimResultRow]:
    """One row per SNR point. A trial draws data and noise from its own
    Philox substreams, so the outcome is a pure function of the config."""
    cfg.validate()
    if not cfg.ebn0_db:
        raise ConfigError("ebn0_db list is empty")
    code = cfg.build_code()
    dec_cfg = cfg.decoder_config()
    rows = []
    for ebn0 in sorted(cfg.ebn0_db):
        channel = ChannelConfig(ebn0, code.rate)
        errors = timeouts = trials = 0
        anv_total = 0.0
        t0 = time.perf_counter()
        while errors < cfg.min_errors and trials < cfg.max_trials:
            gen = RngStream(cfg.master_seed, trials).generator()
            bits = int.from_bytes(gen.bytes((code.K + 7) // 8), "little") & ((1 << code.K) - 1)
            d = BitVec(code.K, bits)
            x = pac_encode(d, code)
            y = modulate(x) + channel.sigma * gen.standard_normal(code.N)
            result = fano_decode(llr(y, channel), code, dec_cfg)
            trials += 1
            anv_total += result.anv
            if result.timed_out:
                timeouts += 1
                errors += 1
            elif result.d_hat != d:
                errors += 1
        rows.append(
            SimResultRow(
                ebn0_db=ebn0,
                trials=trials,
                frame_errors=errors,
                fer=errors / trials,
                mean_anv=anv_total / trials,
                timeouts=timeouts,
                wall_seconds=round(time.perf_counter() - t0, 3),
                seed=cfg.master_seed,
            )
        )
    return rows


def fer_csv(cfg: SimConfig, rows: List[SimResultRow]) -> str:
    lines = [_config_comment(cfg.resolved()), FER_CSV_HEADER]
    lines += [row.csv() for row in rows]
    return "\n".join(lines) + "\n"


def run_spectrum(cfg: SimConfig, guard_k: int = 30, chunks: int = 1):
    """Weight spectrum of the configured code; returns (spectrum, csv text,
    (d_min, count))."""
    cfg.validate()
    code = cfg.build_code()
    from .codec import effective_generator

    spectrum = weight_spectrum(effective_generator(code), guard_k=guard_k, chunks=chunks)
    extra = dict(cfg.resolved(), guard_k=guard_k, chunks=chunks)
    lines = [_config_comment(extra)] + spectrum_csv_lines(spectrum)
    return spectrum, "\n".join(lines) + "\n", min_distance(spectrum)


def run_verify(
    cfg: SimConfig,
    check: str = "all",
    mode: str = "exhaustive",
    samples: int = 100_000,
    seed: int = 42,
) -> List[VerifyReport]:
    """Identity-verification sweep; callers gate the exit code on
    all(report.ok)."""
    dim = PolarDim(cfg.n)
    reports = []
    if check in ("theorem", "all"):
        reports.append(verify_theorem(dim))
    if check in ("prop1", "all"):
        reports.append(verify_prop1(dim, mode=mode, samples=samples, seed=seed))
    if check in ("equiv", "all"):
        cfg.validate()
        code = cfg.build_code()
        if code.K <= 16:
            reports.append(verify_equivalence(code))
        else:
            reports.append(verify_equivalence(code, samples=samples, seed=seed))
    if not reports:
        raise ConfigError(f"unknown check {check!r}")
    return reports
