#include "cosetgeom/mic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {

namespace {

Complex root_of_unity(long long k, long long n) {
  double t = 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

bool power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

std::vector<CMatrix> displacement_operators(int d, PauliKind kind) {
  if (d < 2) throw std::invalid_argument("displacement operators need d >= 2");
  std::vector<CMatrix> out;
  if (kind == PauliKind::Tensor) {
    if (!power_of_two(d)) throw std::invalid_argument("tensor Paulis need d = 2^k");
    auto qubit = displacement_operators(2, PauliKind::WeylHeisenberg);
    out = {CMatrix::Identity(1, 1)};
    for (int n = 1; n < d; n *= 2) {
      std::vector<CMatrix> next;
      for (const auto& a : out) {
        for (const auto& q : qubit) next.push_back(kron(a, q));
      }
      out = std::move(next);
    }
    return out;
  }
  CMatrix x = CMatrix::Zero(d, d);
  CMatrix z = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = root_of_unity(k, d);
  }
  CMatrix xi = CMatrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    CMatrix zj = CMatrix::Identity(d, d);
    for (int j = 0; j < d; ++j) {
      out.push_back(xi * zj);
      zj = zj * z;
    }
    xi = xi * x;
  }
  return out;
}

CVector normalized(const CVector& v) {
  double n = v.norm();
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  return v / n;
}

std::vector<CMatrix> pauli_orbit(const CVector& fiducial, const MicOptions& opt) {
  std::vector<CMatrix> out;
  for (const auto& d : displacement_operators(static_cast<int>(fiducial.size()), opt.pauli)) {
    CVector v = d * fiducial;
    out.push_back(v * v.adjoint());
  }
  return out;
}

namespace {

std::vector<CVector> orbit_vectors(const CVector& fiducial, const MicOptions& opt) {
  std::vector<CVector> out;
  for (const auto& d : displacement_operators(static_cast<int>(fiducial.size()), opt.pauli)) {
    out.push_back(d * fiducial);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd gram_matrix(const CVector& fiducial, const MicOptions& opt) {
  auto vs = orbit_vectors(fiducial, opt);
  const auto n = static_cast<Eigen::Index>(vs.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      double v = std::norm(vs[static_cast<std::size_t>(a)].dot(vs[static_cast<std::size_t>(b)]));
      g(a, b) = g(b, a) = v;
    }
  }
  return g;
}

int gram_rank(const CVector& fiducial, const MicOptions& opt) {
  Eigen::MatrixXd g = gram_matrix(fiducial, opt);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > opt.tolerance * s(0)) ++r;
  }
  return r;
}

PairwiseProducts pairwise_products(const CVector& fiducial, const MicOptions& opt) {
  Eigen::MatrixXd g = gram_matrix(fiducial, opt);
  std::vector<double> vals;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = a + 1; b < g.cols(); ++b) vals.push_back(g(a, b));
  }
  std::sort(vals.begin(), vals.end());
  PairwiseProducts out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= vals.size(); ++i) {
    if (i == vals.size() || (i > start && vals[i] - vals[i - 1] > opt.tolerance)) {
      if (i > start) {
        double sum = 0;
        for (std::size_t j = start; j < i; ++j) sum += vals[j];
        out.values.push_back(sum / static_cast<double>(i - start));
      }
      start = i;
    }
  }
  out.pp = static_cast<int>(out.values.size());
  return out;
}

bool is_sic(const CVector& fiducial, const MicOptions& opt) {
  Eigen::MatrixXd g = gram_matrix(fiducial, opt);
  const double target = 1.0 / (static_cast<double>(fiducial.size()) + 1.0);
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = a + 1; b < g.cols(); ++b) {
      if (std::abs(g(a, b) - target) > opt.tolerance) return false;
    }
  }
  return true;
}

FiducialReport analyze_fiducial(const CVector& fiducial, const MicOptions& opt) {
  FiducialReport r;
  r.dim = static_cast<int>(fiducial.size());
  r.fiducial = fiducial;
  r.gram_rank = gram_rank(fiducial, opt);
  auto pp = pairwise_products(fiducial, opt);
  r.pp = pp.pp;
  r.angle_set = std::move(pp.values);
  r.is_mic = r.gram_rank == r.dim * r.dim;
  r.is_sic = r.is_mic && is_sic(fiducial, opt);
  return r;
}

std::vector<double> born_probabilities(const CMatrix& rho, const CVector& fiducial,
                                       const MicOptions& opt) {
  const auto d = static_cast<double>(fiducial.size());
  std::vector<double> p;
  for (const auto& proj : pauli_orbit(fiducial, opt)) p.push_back((rho * proj).trace().real() / d);
  return p;
}

CMatrix reconstruct_state(const std::vector<double>& p, const CVector& fiducial,
                          const MicOptions& opt) {
  const auto n = fiducial.size();
  if (p.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("need d^2 probabilities");
  }
  if (!is_sic(fiducial, opt)) throw std::invalid_argument("fiducial is not a SIC");
  const auto d = static_cast<double>(n);
  auto projs = pauli_orbit(fiducial, opt);
  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < projs.size(); ++i) rho += ((d + 1.0) * p[i] - 1.0 / d) * projs[i];
  return rho;
}

CMatrix permutation_matrix(const Permutation& g) {
  const auto n = static_cast<Eigen::Index>(g.degree());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(g(static_cast<std::uint32_t>(j)), j) = 1.0;
  return m;
}

bool displacement_equivalent(const CVector& a, const CVector& b, const MicOptions& opt) {
  if (a.size() != b.size()) return false;
  for (const auto& d : displacement_operators(static_cast<int>(a.size()), opt.pauli)) {
    if (std::abs(std::abs(a.dot(d * b)) - 1.0) <= opt.tolerance) return true;
  }
  return false;
}

// ------------------------------------------------------------ fiducials

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept { return PermutationHash{}(p); }
};

// Element pool: one representative per conjugacy class when the group is
// small enough, otherwise a breadth-first ball deduplicated by cycle type.
struct Pool {
  std::vector<Permutation> reps;
  std::vector<Permutation> elements;  // centralizer candidates
  bool complete = true;
};

std::vector<std::size_t> cycle_type(const Permutation& g) {
  std::vector<std::size_t> out;
  std::vector<char> seen(g.degree(), 0);
  for (std::uint32_t x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (auto y = x; !seen[y]; y = g(y)) {
      seen[y] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pool element_pool(const PermutationGroup& p, std::size_t cap) {
  Pool pool;
  const auto& gens = p.generators();
  if (p.order() <= cap) {
    pool.elements = p.elements(cap);
    std::unordered_map<Permutation, std::size_t, PermHash> index;
    for (std::size_t i = 0; i < pool.elements.size(); ++i) index.emplace(pool.elements[i], i);
    std::vector<char> done(pool.elements.size(), 0);
    std::vector<std::size_t> order(pool.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return pool.elements[a] < pool.elements[b]; });
    for (auto i : order) {
      if (done[i]) continue;
      pool.reps.push_back(pool.elements[i]);
      std::vector<std::size_t> stack{i};
      done[i] = 1;
      while (!stack.empty()) {
        auto e = stack.back();
        stack.pop_back();
        for (const auto& s : gens) {
          auto c = index.at(conjugate(pool.elements[e], s));
          if (!done[c]) {
            done[c] = 1;
            stack.push_back(c);
          }
        }
      }
    }
    return pool;
  }
  pool.complete = false;
  std::unordered_map<Permutation, char, PermHash> seen;
  Permutation id(p.degree());
  pool.elements.push_back(id);
  seen.emplace(id, 1);
  for (std::size_t i = 0; i < pool.elements.size() && pool.elements.size() < cap; ++i) {
    for (const auto& s : gens) {
      auto e = pool.elements[i] * s;
      if (seen.emplace(e, 1).second) pool.elements.push_back(e);
      if (pool.elements.size() >= cap) break;
    }
  }
  std::set<std::vector<std::size_t>> types;
  for (const auto& e : pool.elements) {
    if (types.insert(cycle_type(e)).second) pool.reps.push_back(e);
  }
  return pool;
}

std::vector<Permutation> generated_abelian(const Permutation& g, const Permutation& h) {
  std::vector<Permutation> powers_g{Permutation(g.degree())};
  for (auto x = g; !x.is_identity(); x = x * g) powers_g.push_back(x);
  std::set<Permutation> all;
  Permutation y(g.degree());
  do {
    for (const auto& x : powers_g) all.insert(x * y);
    y = y * h;
  } while (!y.is_identity());
  return {all.begin(), all.end()};
}

// Rescales so the first entry of significant size is real and positive.
CVector fix_phase(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-6) return v * (std::abs(v(i)) / v(i));
  }
  return v;
}

}  // namespace

FiducialSearch find_fiducials(const PermutationGroup& p, const FiducialSearchOptions& opt) {
  FiducialSearch out;
  const auto d = static_cast<Eigen::Index>(p.degree());
  if (d < 2) return out;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return opt.time_budget.count() > 0 &&
           std::chrono::steady_clock::now() - start > opt.time_budget;
  };

  Pool pool = element_pool(p, opt.element_cap);
  out.complete = pool.complete;
  std::set<std::vector<Permutation>> visited;
  std::vector<CVector> kept;

  for (const auto& g : pool.reps) {
    if (g.is_identity()) continue;
    for (const auto& h : pool.elements) {
      if (g * h != h * g) continue;
      auto elems = generated_abelian(g, h);
      if (!visited.insert(elems).second) continue;
      if (out.subgroups_examined >= opt.max_subgroups || out_of_time()) {
        out.complete = false;
        break;
      }
      ++out.subgroups_examined;

      const auto m = static_cast<long long>(g.order());
      const auto n = static_cast<long long>(h.order());
      std::vector<CMatrix> gpow{CMatrix::Identity(d, d)}, hpow{CMatrix::Identity(d, d)};
      CMatrix mg = permutation_matrix(g), mh = permutation_matrix(h);
      for (long long a = 1; a < m; ++a) gpow.push_back(mg * gpow.back());
      for (long long b = 1; b < n; ++b) hpow.push_back(mh * hpow.back());
      for (long long j = 0; j < m; ++j) {
        CMatrix pg = CMatrix::Zero(d, d);
        for (long long a = 0; a < m; ++a) pg += root_of_unity(-j * a % m + m, m) * gpow[static_cast<std::size_t>(a)];
        pg /= static_cast<double>(m);
        if (std::abs(pg.trace()) < 0.5) continue;
        for (long long k = 0; k < n; ++k) {
          CMatrix ph = CMatrix::Zero(d, d);
          for (long long b = 0; b < n; ++b) ph += root_of_unity(-k * b % n + n, n) * hpow[static_cast<std::size_t>(b)];
          ph /= static_cast<double>(n);
          CMatrix proj = pg * ph;
          if (std::abs(proj.trace() - Complex(1.0, 0.0)) > 1e-6) continue;
          Eigen::Index col = 0;
          proj.colwise().norm().maxCoeff(&col);
          CVector v = fix_phase(normalized(proj.col(col)));
          bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const CVector& w) {
            return displacement_equivalent(w, v, opt.mic);
          });
          if (duplicate) continue;
          kept.push_back(v);
          out.candidates.push_back(analyze_fiducial(v, opt.mic));
        }
      }
    }
    if (!out.complete && (out.subgroups_examined >= opt.max_subgroups || out_of_time())) break;
  }
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [](const FiducialReport& a, const FiducialReport& b) {
                     if (a.is_mic != b.is_mic) return a.is_mic;
                     return a.pp < b.pp;
                   });
  return out;
}

}  // namespace cosetgeom
