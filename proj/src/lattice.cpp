#include "ness/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ness::lattice {

namespace {

constexpr Complex kI{0.0, 1.0};

// Row-major linear index of a coordinate vector (0-based in, 0-based out).
int linear_index(const std::vector<int>& coord, const std::vector<int>& axes) {
  int idx = 0;
  for (std::size_t a = 0; a < axes.size(); ++a) idx = idx * axes[a] + coord[a];
  return idx;
}

}  // namespace

int LatticeSpec::total_sites() const {
  int n = 1;
  for (int len : axis_lengths) n *= len;
  return axis_lengths.empty() ? 0 : n;
}

void validate(const LatticeSpec& spec) {
  if (spec.axis_lengths.empty())
    throw std::invalid_argument("lattice: at least one axis required");
  for (int len : spec.axis_lengths)
    if (len < 1) throw std::invalid_argument("lattice: axis lengths must be positive");
  const int n = spec.total_sites();
  if (static_cast<int>(spec.gammas.size()) != n)
    throw std::invalid_argument("lattice: gammas must list one rate per site");
  for (double g : spec.gammas)
    if (g < 0.0) throw std::invalid_argument("lattice: rates must be nonnegative");
}

std::vector<std::pair<int, int>> bonds(const LatticeSpec& spec) {
  validate(spec);
  const auto& axes = spec.axis_lengths;
  const int n = spec.total_sites();
  std::vector<std::pair<int, int>> out;

  std::vector<int> coord(axes.size(), 0);
  for (int site = 0; site < n; ++site) {
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (axes[a] < 2) continue;
      std::vector<int> nb = coord;
      if (coord[a] + 1 < axes[a]) {
        nb[a] = coord[a] + 1;
        out.emplace_back(site + 1, linear_index(nb, axes) + 1);
      } else if (spec.boundary == Boundary::Periodic && axes[a] > 2) {
        // wrap bond; on length-2 axes the wrap duplicates the open bond
        nb[a] = 0;
        const int other = linear_index(nb, axes) + 1;
        out.emplace_back(std::min(site + 1, other), std::max(site + 1, other));
      }
    }
    // advance row-major coordinate
    for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
      if (++coord[a] < axes[a]) break;
      coord[a] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CMatrix build_hamiltonian(const LatticeSpec& spec) {
  validate(spec);
  const int n = spec.total_sites();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const CMatrix sp = local_operator(LocalOp::SigmaPlus);
  const CMatrix sm = local_operator(LocalOp::SigmaMinus);
  const CMatrix sx = local_operator(LocalOp::SigmaX);
  const CMatrix sz = local_operator(LocalOp::SigmaZ);

  CMatrix h = CMatrix::Zero(dim, dim);
  for (const auto& [i, j] : bonds(spec)) {
    const CMatrix pi = embed_site(sp, i, n), mi = embed_site(sm, i, n);
    const CMatrix pj = embed_site(sp, j, n), mj = embed_site(sm, j, n);
    h += spec.hopping * (pi * mj + pj * mi);
  }
  for (int i = 1; i <= n; ++i)
    h += spec.delta_z * embed_site(sz, i, n) + spec.delta_x * embed_site(sx, i, n);
  return h;
}

std::vector<CMatrix> build_jumps(const LatticeSpec& spec) {
  validate(spec);
  const int n = spec.total_sites();
  const CMatrix sm = local_operator(LocalOp::SigmaMinus);
  std::vector<CMatrix> jumps;
  jumps.reserve(n);
  for (int i = 1; i <= n; ++i)
    jumps.push_back(std::sqrt(spec.gammas[static_cast<std::size_t>(i - 1)]) * embed_site(sm, i, n));
  return jumps;
}

SpCMatrix build_effective_sparse(const LatticeSpec& spec) {
  validate(spec);
  const int n = spec.total_sites();
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<Eigen::Triplet<Complex>> trips;

  // Basis index x encodes site s in bit (n - s); bit 0 means excited.
  const auto bit_of_site = [n](Eigen::Index x, int site) {
    return (x >> (n - site)) & 1;
  };

  for (Eigen::Index x = 0; x < dim; ++x) {
    Complex diag = 0.0;
    for (int s = 1; s <= n; ++s) {
      const bool ground = bit_of_site(x, s);
      diag += spec.delta_z * (ground ? -1.0 : 1.0);
      if (!ground) diag -= kI * 0.5 * spec.gammas[static_cast<std::size_t>(s - 1)];
    }
    if (diag != 0.0) trips.emplace_back(x, x, diag);
    for (int s = 1; s <= n; ++s)
      if (spec.delta_x != 0.0)
        trips.emplace_back(x, x ^ (Eigen::Index{1} << (n - s)), spec.delta_x);
  }
  for (const auto& [i, j] : bonds(spec)) {
    if (spec.hopping == 0.0) break;
    const Eigen::Index bi = Eigen::Index{1} << (n - i), bj = Eigen::Index{1} << (n - j);
    for (Eigen::Index x = 0; x < dim; ++x)
      if (((x & bi) == 0) && ((x & bj) != 0)) {
        const Eigen::Index y = (x | bi) & ~bj;  // excitation hops j -> i
        trips.emplace_back(x, y, spec.hopping);
        trips.emplace_back(y, x, spec.hopping);
      }
  }

  SpCMatrix k(dim, dim);
  k.setFromTriplets(trips.begin(), trips.end());
  return k;
}

GeneratorSet effective_generator(const CMatrix& h, std::vector<CMatrix> jumps,
                                 double hermiticity_tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("effective_generator: H must be square");
  const Eigen::Index dim = h.rows();
  for (const CMatrix& l : jumps)
    if (l.rows() != dim || l.cols() != dim)
      throw std::invalid_argument("effective_generator: jump dimension mismatch");
  if (!is_hermitian(h, hermiticity_tol))
    throw std::invalid_argument("effective_generator: H is not Hermitian within tolerance");

  CMatrix k = h;
  for (const CMatrix& l : jumps) k -= kI * 0.5 * (l.adjoint() * l);
  return GeneratorSet{dim, std::move(k), std::move(jumps), h};
}

GeneratorSet build_generator_set(const LatticeSpec& spec) {
  return effective_generator(build_hamiltonian(spec), build_jumps(spec));
}

GeneratorSet apply_gauge(const GeneratorSet& gs, const std::vector<Complex>& alphas, double beta) {
  if (alphas.size() != gs.jumps.size())
    throw std::invalid_argument("apply_gauge: one alpha per jump required");
  const CMatrix id = CMatrix::Identity(gs.dim, gs.dim);
  CMatrix h = gs.hamiltonian + beta * id;
  std::vector<CMatrix> jumps;
  jumps.reserve(gs.jumps.size());
  for (std::size_t k = 0; k < gs.jumps.size(); ++k) {
    h -= kI * 0.5 * (std::conj(alphas[k]) * gs.jumps[k] - alphas[k] * gs.jumps[k].adjoint());
    jumps.push_back(gs.jumps[k] + alphas[k] * id);
  }
  return effective_generator(h, std::move(jumps));
}

GeneratorSet mix_jumps(const GeneratorSet& gs, const CMatrix& u, double unitarity_tol) {
  const Eigen::Index m = static_cast<Eigen::Index>(gs.jumps.size());
  if (u.rows() != m || u.cols() != m)
    throw std::invalid_argument("mix_jumps: mixing matrix must match the jump count");
  const CMatrix gram = u.adjoint() * u;
  if (max_abs_diff(gram, CMatrix::Identity(m, m)) > unitarity_tol * std::max(1.0, max_abs(u)))
    throw std::invalid_argument("mix_jumps: mixing matrix is not unitary within tolerance");

  std::vector<CMatrix> mixed(gs.jumps.size(), CMatrix::Zero(gs.dim, gs.dim));
  for (Eigen::Index l = 0; l < m; ++l)
    for (Eigen::Index k = 0; k < m; ++k) mixed[l] += u(l, k) * gs.jumps[k];

  GeneratorSet out = gs;  // K and H deliberately untouched
  out.jumps = std::move(mixed);
  return out;
}

}  // namespace ness::lattice
