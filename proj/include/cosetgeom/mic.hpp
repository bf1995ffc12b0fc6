#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cosetgeom/perm_group.hpp"

namespace cosetgeom {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class PauliKind {
  WeylHeisenberg,  // X^i Z^j on one qudit
  Tensor,          // tensor products of qubit Paulis, d = 2^k only
};

struct MicOptions {
  double tolerance = 1e-8;  // relative rank threshold and pp clustering width
  PauliKind pauli = PauliKind::WeylHeisenberg;
};

/// d^2 unitaries. For Weyl-Heisenberg the entry at i*d+j is X^i Z^j, with X
/// the cyclic shift |k> -> |k+1> and Z = diag(w^k), w = exp(2 pi i/d).
std::vector<CMatrix> displacement_operators(int d, PauliKind kind = PauliKind::WeylHeisenberg);

/// Divides by the Euclidean norm; throws std::invalid_argument on a zero vector.
CVector normalized(const CVector& v);

/// Projectors D_a|psi><psi|D_a^dagger in displacement order.
std::vector<CMatrix> pauli_orbit(const CVector& fiducial, const MicOptions& opt = {});

/// Real symmetric matrix of |<psi_a|psi_b>|^2 = tr(Pi_a Pi_b).
Eigen::MatrixXd gram_matrix(const CVector& fiducial, const MicOptions& opt = {});

int gram_rank(const CVector& fiducial, const MicOptions& opt = {});

struct PairwiseProducts {
  int pp = 0;
  std::vector<double> values;  // cluster means, ascending
};
PairwiseProducts pairwise_products(const CVector& fiducial, const MicOptions& opt = {});

bool is_sic(const CVector& fiducial, const MicOptions& opt = {});

struct FiducialReport {
  int dim = 0;
  int gram_rank = 0;
  int pp = 0;
  bool is_mic = false;
  bool is_sic = false;
  std::vector<double> angle_set;
  CVector fiducial;
};

FiducialReport analyze_fiducial(const CVector& fiducial, const MicOptions& opt = {});

/// p_i = tr(rho Pi_i)/d.
std::vector<double> born_probabilities(const CMatrix& rho, const CVector& fiducial,
                                       const MicOptions& opt = {});

/// rho = sum_i [(d+1) p_i - 1/d] Pi_i. Throws std::invalid_argument unless
/// the fiducial is a SIC and p has d^2 entries.
CMatrix reconstruct_state(const std::vector<double>& p, const CVector& fiducial,
                          const MicOptions& opt = {});

struct FiducialSearchOptions {
  MicOptions mic;
  std::size_t element_cap = 20000;    // full class computation up to this group order
  std::size_t max_subgroups = 5000;   // abelian subgroups examined
  std::chrono::milliseconds time_budget{0};
};

struct FiducialSearch {
  std::vector<FiducialReport> candidates;  // (is_mic desc, pp asc), then discovery order
  bool complete = true;
  std::size_t subgroups_examined = 0;
};

/// Rank-1 joint eigenvectors of the permutation matrices of abelian
/// subgroups <g, h>, g a class representative and h in its centralizer,
/// deduplicated up to phase and displacement.
FiducialSearch find_fiducials(const PermutationGroup& p, const FiducialSearchOptions& opt = {});

/// M[i][j] = 1 iff g(j) = i.
CMatrix permutation_matrix(const Permutation& g);

/// True when |<a|D b>| = 1 for some displacement D.
bool displacement_equivalent(const CVector& a, const CVector& b, const MicOptions& opt = {});

}  // namespace cosetgeom
