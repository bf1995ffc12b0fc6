#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cosetgeom/mic.hpp"

using namespace cosetgeom;

namespace {

constexpr double kTol = 1e-8;

CVector qubit_sic() {
  double c = std::sqrt((1.0 + 1.0 / std::sqrt(3.0)) / 2.0);
  double s = std::sqrt(1.0 - c * c);
  CVector v(2);
  v << c, s * std::polar(1.0, std::numbers::pi / 4);
  return v;
}

// Numerically located Weyl-Heisenberg SIC fiducial in dimension 5.
CVector five_sic() {
  CVector v(5);
  v << Complex(0.39104489402214759, 0.0), Complex(-0.042439199999883319, 0.16605477181904993),
      Complex(-0.28486558319586686, -0.64712933282796226),
      Complex(0.32098525032485292, -0.34885155217623642),
      Complex(-0.26015916739393657, 0.15928626827768752);
  return normalized(v);
}

CMatrix random_density(int d, std::mt19937& rng) {
  std::normal_distribution<double> n;
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = Complex(n(rng), n(rng));
  }
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

CVector klein5() {
  CVector v(5);
  v << 0, 1, -1, -1, 1;
  return normalized(v);
}

}  // namespace

TEST_SUITE("mic") {
  TEST_CASE("qubit displacements") {
    auto d = displacement_operators(2);
    REQUIRE(d.size() == 4);
    CMatrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    CHECK(d[0].isApprox(CMatrix::Identity(2, 2)));
    CHECK(d[1].isApprox(z));
    CHECK(d[2].isApprox(x));
    CHECK(d[3].isApprox(x * z));
  }

  TEST_CASE("trace orthogonality") {
    for (int n = 2; n <= 7; ++n) {
      auto ds = displacement_operators(n);
      REQUIRE(ds.size() == static_cast<std::size_t>(n * n));
      for (std::size_t a = 0; a < ds.size(); ++a) {
        CHECK((ds[a] * ds[a].adjoint()).isApprox(CMatrix::Identity(n, n)));
        for (std::size_t b = 0; b < ds.size(); ++b) {
          Complex t = (ds[a].adjoint() * ds[b]).trace();
          CHECK(std::abs(t - Complex(a == b ? n : 0, 0)) < 1e-10);
        }
      }
    }
    auto t4 = displacement_operators(4, PauliKind::Tensor);
    REQUIRE(t4.size() == 16);
    for (std::size_t a = 0; a < t4.size(); ++a) {
      for (std::size_t b = 0; b < t4.size(); ++b) {
        CHECK(std::abs((t4[a].adjoint() * t4[b]).trace() - Complex(a == b ? 4 : 0, 0)) < 1e-10);
      }
    }
    CHECK_THROWS(displacement_operators(6, PauliKind::Tensor));
    CHECK_THROWS(displacement_operators(1));
  }

  TEST_CASE("orbit projectors") {
    CVector e0 = CVector::Zero(2);
    e0(0) = 1;
    auto projs = pauli_orbit(e0);
    CHECK(projs[0].isApprox(e0 * e0.adjoint()));
    std::vector<CMatrix> distinct;
    for (const auto& p : projs) {
      if (std::none_of(distinct.begin(), distinct.end(), [&](const CMatrix& q) { return q.isApprox(p); })) {
        distinct.push_back(p);
      }
    }
    CHECK(distinct.size() == 2);
    CHECK(gram_rank(e0) < 4);
    CHECK_FALSE(is_sic(e0));

    auto five = pauli_orbit(klein5());
    for (std::size_t a = 0; a < five.size(); ++a) {
      CHECK((five[a] * five[a]).isApprox(five[a]));
      for (std::size_t b = a + 1; b < five.size(); ++b) CHECK_FALSE(five[a].isApprox(five[b]));
    }
  }

  TEST_CASE("Gram matrix structure") {
    std::mt19937 rng(5);
    std::normal_distribution<double> n;
    for (int d = 2; d <= 6; ++d) {
      CVector v(d);
      for (int i = 0; i < d; ++i) v(i) = Complex(n(rng), n(rng));
      v = normalized(v);
      auto g = gram_matrix(v);
      CHECK(g.isApprox(g.transpose()));
      for (Eigen::Index a = 0; a < g.rows(); ++a) {
        CHECK(std::abs(g(a, a) - 1.0) < 1e-12);
        CHECK(std::abs(g.row(a).sum() - d) < 1e-9);
        for (Eigen::Index b = 0; b < g.cols(); ++b) {
          CHECK(g(a, b) >= -1e-12);
          CHECK(g(a, b) <= 1 + 1e-12);
        }
      }
    }
  }

  TEST_CASE("qubit SIC") {
    auto v = qubit_sic();
    CHECK(is_sic(v));
    auto r = analyze_fiducial(v);
    CHECK(r.gram_rank == 4);
    CHECK(r.pp == 1);
    CHECK(r.is_mic);
    CHECK(std::abs(r.angle_set[0] - 1.0 / 3.0) < kTol);
  }

  TEST_CASE("dimension-5 SIC") {
    auto v = five_sic();
    auto r = analyze_fiducial(v);
    CHECK(r.gram_rank == 25);
    CHECK(r.pp == 1);
    CHECK(r.is_sic);
  }

  TEST_CASE("invariance under phase and displacement") {
    Complex w6 = std::polar(1.0, std::numbers::pi / 3);
    CVector v6(6);
    v6 << 1, w6 - 1.0, 0, 0, -w6, 0;
    CVector v7(7);
    v7 << 1, 1, 0, -1, 0, -1, 0;
    for (CVector v : {klein5(), normalized(v6), normalized(v7)}) {
      auto base = analyze_fiducial(v);
      auto ds = displacement_operators(static_cast<int>(v.size()));
      for (std::size_t k : {std::size_t{1}, std::size_t{7}, ds.size() - 1}) {
        CVector u = std::polar(1.0, 0.7) * (ds[k] * v);
        auto r = analyze_fiducial(u);
        CHECK(r.gram_rank == base.gram_rank);
        CHECK(r.pp == base.pp);
        CHECK(displacement_equivalent(u, v));
      }
    }
  }

  TEST_CASE("reconstruction round trips") {
    std::mt19937 rng(42);
    for (auto v : {qubit_sic(), five_sic()}) {
      const int d = static_cast<int>(v.size());
      for (int trial = 0; trial < 20; ++trial) {
        CMatrix rho = random_density(d, rng);
        auto p = born_probabilities(rho, v);
        double total = 0;
        for (double x : p) total += x;
        CHECK(std::abs(total - 1.0) < 1e-10);
        CMatrix back = reconstruct_state(p, v);
        CHECK((back - rho).cwiseAbs().maxCoeff() <= 1e-8);
      }
      std::vector<double> uniform(static_cast<std::size_t>(d * d), 1.0 / (d * d));
      CHECK((reconstruct_state(uniform, v) - CMatrix::Identity(d, d) / d).cwiseAbs().maxCoeff() <= 1e-8);
    }
    // a stabilizer state of the qubit
    CVector plus(2);
    plus << 1, 1;
    plus = normalized(plus);
    CMatrix rho = plus * plus.adjoint();
    CHECK((reconstruct_state(born_probabilities(rho, qubit_sic()), qubit_sic()) - rho).cwiseAbs().maxCoeff() <= 1e-8);
  }

  TEST_CASE("reconstruction rejects non-SIC fiducials") {
    std::vector<double> p(25, 1.0 / 25);
    CHECK_THROWS_AS(reconstruct_state(p, klein5()), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_state(std::vector<double>(3, 0.0), qubit_sic()), std::invalid_argument);
  }

  TEST_CASE("fiducial search on A5") {
    auto a5 = parse_generators("(1,2,3,4,5)\n(3,4,5)\n");
    auto s = find_fiducials(a5);
    CHECK(s.complete);
    REQUIRE_FALSE(s.candidates.empty());
    bool hit = false;
    for (const auto& c : s.candidates) {
      if (c.is_mic && displacement_equivalent(c.fiducial, klein5())) hit = true;
    }
    CHECK(hit);
    // sorted by MIC first, then pp
    for (std::size_t i = 1; i < s.candidates.size(); ++i) {
      const auto& a = s.candidates[i - 1];
      const auto& b = s.candidates[i];
      CHECK((a.is_mic > b.is_mic || (a.is_mic == b.is_mic && a.pp <= b.pp)));
    }
    // deterministic
    auto again = find_fiducials(a5);
    REQUIRE(again.candidates.size() == s.candidates.size());
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      CHECK(again.candidates[i].gram_rank == s.candidates[i].gram_rank);
      CHECK(again.candidates[i].pp == s.candidates[i].pp);
    }
  }

  TEST_CASE("Klein subgroup eigenvector") {
    // (0,1,-1,-1,1) is fixed by (2,5)(3,4) and negated by (2,3)(4,5)
    auto a = permutation_matrix(Permutation::from_cycles("(2,5)(3,4)", 5));
    auto b = permutation_matrix(Permutation::from_cycles("(2,3)(4,5)", 5));
    CVector v = klein5();
    CHECK((a * v).isApprox(v));
    CHECK((b * v).isApprox(-v));
  }

  TEST_CASE("fiducial search edge cases") {
    CHECK(find_fiducials(PermutationGroup(1, {})).candidates.empty());
    auto a5 = parse_generators("(1,2,3,4,5)\n(3,4,5)\n");
    FiducialSearchOptions opt;
    opt.max_subgroups = 1;
    CHECK_FALSE(find_fiducials(a5, opt).complete);
  }
}
