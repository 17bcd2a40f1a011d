#pragma once

#include <random>
#include <string>
#include <vector>

#include "swampstab/config.hpp"

namespace swampstab::sweeps {

struct SweepResult {
  std::string name;
  long instances = 0;
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};

// Deterministic random model data (std::mt19937 driven, no distributions).
long rnd(std::mt19937& rng, long lo, long hi);
Rational rnd_rational(std::mt19937& rng, bool allow_zero);
Rational rnd_positive_rational(std::mt19937& rng);
Mat rnd_invertible(std::mt19937& rng, int n);
WeightedFlag rnd_weighted_flag(std::mt19937& rng, int n, bool allow_trivial = true);
DecorationForm rnd_form(std::mt19937& rng, const TensorRepSpec& spec);

// Oracle-equivalence and property sweeps. Each runs `instances` random
// cases and reports the first failure.
SweepResult mu_oracle_sweep(unsigned seed, long instances);
SweepResult gamma_roundtrip_sweep(unsigned seed, long instances);
SweepResult estimate_sweep(unsigned seed, long instances);
SweepResult parabolic_sweep(unsigned seed, long instances);
SweepResult level_lemma_sweep(unsigned seed, long instances);
SweepResult level_mu_sweep(unsigned seed, long instances);
SweepResult level_ngo_sweep(unsigned seed, long instances);
SweepResult omega_sweep(unsigned seed, long instances);
SweepResult deformation_sweep(unsigned seed, long instances);
SweepResult gieseker_sweep(unsigned seed, long instances);
SweepResult slope_bound_sweep(unsigned seed, long instances);

// All sweeps at `scale` times the default selftest instance counts.
std::vector<SweepResult> run_all(unsigned seed, int scale = 1);

}  // namespace swampstab::sweeps
