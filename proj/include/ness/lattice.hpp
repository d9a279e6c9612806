#pragma once

#include <utility>
#include <vector>

#include "ness/linalg.hpp"

namespace ness::lattice {

enum class Boundary { Open, Periodic };

// Driven-dissipative spin lattice on a hypercubic grid: flip-flop hopping J
// between nearest neighbors, on-site drive delta_x and detuning delta_z, and
// local loss with rates gammas. Sites are linearized in row-major order over
// axis_lengths; nearest neighbors differ by one in exactly one coordinate.
struct LatticeSpec {
  std::vector<int> axis_lengths;
  double hopping = 1.0;    // J
  double delta_x = 0.0;    // Rabi frequency
  double delta_z = 0.0;    // detuning
  std::vector<double> gammas;
  Boundary boundary = Boundary::Open;

  int total_sites() const;
};

// Throws std::invalid_argument when the spec violates its invariants.
void validate(const LatticeSpec& spec);

// Nearest-neighbor site pairs (1-based, first < second), each bond once.
std::vector<std::pair<int, int>> bonds(const LatticeSpec& spec);

// H = sum_<i,j> J (s_i^+ s_j^- + s_j^+ s_i^-) + sum_i (dz s_i^z + dx s_i^x).
CMatrix build_hamiltonian(const LatticeSpec& spec);

// L_i = sqrt(gamma_i) s_i^-; zero rates yield zero operators, retained.
std::vector<CMatrix> build_jumps(const LatticeSpec& spec);

// Sparse effective generator K = H - (i/2) sum L*L at the spec parameters,
// for pattern work at sizes where dense storage is wasteful.
SpCMatrix build_effective_sparse(const LatticeSpec& spec);

// Effective generator set; K is the first element of the connectivity
// generator set, the jumps are the rest.
struct GeneratorSet {
  Eigen::Index dim = 0;
  CMatrix effective;    // K = H - (i/2) sum L*L
  std::vector<CMatrix> jumps;
  CMatrix hamiltonian;  // retained for the algebraic criteria
};

GeneratorSet effective_generator(const CMatrix& h, std::vector<CMatrix> jumps,
                                 double hermiticity_tol = 1e-10);

GeneratorSet build_generator_set(const LatticeSpec& spec);

// Gauge transformation L_l -> L_l + alpha_l I,
// H -> H - (i/2) sum_k (conj(alpha_k) L_k - alpha_k L_k^*) + beta I.
// Leaves the generated dynamics unchanged.
GeneratorSet apply_gauge(const GeneratorSet& gs, const std::vector<Complex>& alphas, double beta);

// Unitary mixing L_l -> sum_m u(l, m) L_m; H and K are untouched.
GeneratorSet mix_jumps(const GeneratorSet& gs, const CMatrix& u, double unitarity_tol = 1e-10);

}  // namespace ness::lattice
