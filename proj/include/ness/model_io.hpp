#pragma once

#include <optional>
#include <string>

#include "ness/lattice.hpp"

namespace ness::modelio {

// On-disk problem description: dim, Hamiltonian and jump matrices as nested
// arrays of [re, im] pairs, plus the generating lattice block when the model
// came from the lattice builder. Doubles are written with 17 significant
// digits so round-trips are lossless.
struct Model {
  lattice::GeneratorSet generators;
  std::optional<lattice::LatticeSpec> spec;
  std::string descriptor;  // short human-readable summary
};

constexpr int kModelSchemaVersion = 1;

Model from_lattice(const lattice::LatticeSpec& spec);

void save_model(const Model& model, const std::string& path);

// Throws std::runtime_error with position diagnostics on malformed input.
Model load_model(const std::string& path);

// 17-significant-digit formatting shared by every serializer.
std::string format_double(double x);

}  // namespace ness::modelio
