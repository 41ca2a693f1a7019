#include <doctest.h>

#include <cmath>
#include <complex>

#include "cayley/error.hpp"
#include "cayley/spectra.hpp"

using namespace cayley;

TEST_CASE("adjacency matrices") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  LevelMatrix a0 = adjacency_matrix(z2, 0);
  CHECK(a0.dim == 1);
  CHECK(a0.entry(0, 0) == 4); // 2n

  LevelMatrix a1 = adjacency_matrix(z2, 1);
  CHECK(a1.entry(0, 0) == 2);
  CHECK(a1.entry(0, 1) == 2);
  CHECK(a1.entry(1, 0) == 2);
  CHECK(a1.entry(1, 1) == 2);

  for (const FiniteGroup& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric3()})
    for (int k = 0; k <= 3; ++k) {
      LevelMatrix a = adjacency_matrix(g, k);
      CHECK(a.symmetric());
      for (long long s : a.row_sums()) CHECK(s == 2 * g.order());
    }
}

TEST_CASE("garbage matrix S_k") {
  LevelMatrix s0 = garbage_matrix(2, 0);
  CHECK(s0.dim == 1);
  CHECK(s0.entry(0, 0) == 1); // n - 1

  LevelMatrix s1 = garbage_matrix(2, 1);
  CHECK(s1.dim == 2);
  CHECK(s1.entry(0, 0) == 0);
  CHECK(s1.entry(0, 1) == 1);
  CHECK(s1.entry(1, 0) == 1);

  LevelMatrix s1b = garbage_matrix(3, 1);
  CHECK(s1b.dim == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s1b.entry(i, j) == (i == j ? 0 : 1));

  // S_k = T (x) I has size n^k
  CHECK(garbage_matrix(3, 2).dim == 9);
  CHECK(garbage_matrix(3, 2).entry(0, 3) == 1);
  CHECK(garbage_matrix(3, 2).entry(0, 4) == 0);
}

TEST_CASE("sum of non-identity products") {
  CHECK(verify_sum_nonidentity(FiniteGroup::cyclic(2), 0));
  CHECK(verify_sum_nonidentity(FiniteGroup::cyclic(2), 1));
  for (int k = 0; k <= 3; ++k) CHECK(verify_sum_nonidentity(FiniteGroup::cyclic(3), k));
  CHECK(verify_sum_nonidentity(FiniteGroup::symmetric3(), 2));
}

TEST_CASE("P and Q polynomials") {
  auto [p1, q1] = pq_polynomials(2, 1);
  CHECK(p1 == BivariatePolynomial::mu() - BivariatePolynomial::lambda());
  CHECK(q1 == BivariatePolynomial::constant(1));

  for (int n : {2, 3}) {
    auto [p2, q2] = pq_polynomials(n, 2);
    // P_2(lambda, 0) = lambda^2 - n^2, Q_2(lambda, 0) = -lambda
    for (double lam : {0.3, -1.7, 2.0}) {
      CHECK(p2.eval(lam, 0.0) == doctest::Approx(lam * lam - n * n));
      CHECK(q2.eval(lam, 0.0) == doctest::Approx(-lam));
    }
  }

  // closed form at lambda = 2n cos z:
  // P_k = -((-n e^{iz})^{k+1} - (-n e^{-iz})^{k+1}) / (2 n i sin z)
  const double z = M_PI / 5;
  for (int n : {2, 3}) {
    for (int k = 1; k <= 6; ++k) {
      auto [p, q] = pq_polynomials(n, k);
      double lam = 2.0 * n * std::cos(z);
      std::complex<double> i(0, 1);
      std::complex<double> up = std::pow(-double(n) * std::exp(i * z), k + 1);
      std::complex<double> dn = std::pow(-double(n) * std::exp(-i * z), k + 1);
      std::complex<double> expect = -(up - dn) / (2.0 * n * i * std::sin(z));
      CHECK(std::abs(p.eval(lam, 0.0) - expect.real()) < 1e-10 * std::abs(expect.real()) + 1e-10);
    }
  }
}

TEST_CASE("F_k = P_k / Q_k away from poles") {
  // F_2(lambda, 0) = (n^2 - lambda^2) / lambda
  for (int n : {2, 3}) {
    auto [p2, q2] = pq_polynomials(n, 2);
    for (double lam : {0.5, 1.25, -2.5}) {
      double f2 = (n * n - lam * lam) / lam;
      CHECK(p2.eval(lam, 0.0) / q2.eval(lam, 0.0) == doctest::Approx(f2));
    }
    // recurrence route F_k vs P_k/Q_k at a generic point
    double lam = 0.7, mu = -0.3;
    double f = mu - lam;
    for (int k = 2; k <= 5; ++k) {
      f = -(lam + (n - 1) * mu) - double(n) * n / f;
      auto [pk, qk] = pq_polynomials(n, k);
      CHECK(f == doctest::Approx(pk.eval(lam, mu) / qk.eval(lam, mu)));
    }
  }
}

TEST_CASE("phi evaluation") {
  PhiValue v = phi_eval(2, 0, 4.0, 0.0); // 2n - lambda = 0
  CHECK(!v.pole);
  CHECK(v.value() == 0.0);

  // A_1 for n=2 has eigenvalues {4, 0}; lambda = 0 zeroes the last factor F_1
  PhiValue v1 = phi_eval(2, 1, 0.0, 0.0);
  CHECK(!v1.pole);
  CHECK(v1.value() == 0.0);

  // an exact zero of an intermediate F_i signals a pole
  PhiValue v2 = phi_eval(2, 3, 0.0, 0.0); // F_1 = 0 with k > 1
  CHECK(v2.pole);

  // -2n is never an eigenvalue
  for (int n : {2, 3})
    for (int k = 0; k <= 6; ++k) {
      PhiValue edge = phi_eval(n, k, -2.0 * n, 0.0);
      CHECK(!edge.pole);
      CHECK(edge.sign != 0);
    }

  // at the closed-form atoms the log-magnitude collapses
  for (int n : {2, 3})
    for (int k = 1; k <= 5; ++k) {
      SpectrumAtomList atoms = closed_form_spectrum(n, k);
      for (const auto& atom : atoms.atoms) {
        if (atom.q == 1) continue; // lambda = 2n handled by the prefactor
        double lam = 2.0 * n * atom.value();
        PhiValue at_atom = phi_eval(n, k, lam, 0.0);
        PhiValue left = phi_eval(n, k, lam - 0.013, 0.0);
        PhiValue right = phi_eval(n, k, lam + 0.013, 0.0);
        REQUIRE(!left.pole);
        REQUIRE(!right.pole);
        if (at_atom.sign == 0) continue; // exact zero, nothing more to check
        REQUIRE(!at_atom.pole);
        double flank = std::min(left.log_abs, right.log_abs);
        CHECK(at_atom.log_abs < flank - 8);
      }
    }
}

TEST_CASE("phi against the determinant oracle") {
  unsigned long seed = 17;
  auto rnd = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return (seed >> 33) / 2147483648.0; // [0, 1)
  };
  for (int n : {2, 3}) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    for (int k = 0; k <= 2; ++k)
      for (int trial = 0; trial < 5; ++trial) {
        double lam = 4.0 * rnd() - 2.0;
        double mu = 4.0 * rnd() - 2.0;
        double det = phi_det(g, k, lam, mu);
        PhiValue phi = phi_eval(n, k, lam, mu);
        if (phi.pole || phi.sign == 0) continue;
        CHECK(std::log(std::fabs(det)) == doctest::Approx(phi.log_abs).epsilon(1e-6));
        CHECK((det > 0 ? 1 : -1) == phi.sign);
      }
  }
}

TEST_CASE("determinant recursion identity") {
  // Phi_{k+1}(l, m) = (m - l)^{(n-1) n^k} Phi_k(l', m') via dense determinants
  unsigned long seed = 23;
  auto rnd = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return (seed >> 33) / 2147483648.0;
  };
  for (int n : {2, 3}) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    for (int k = 0; k <= 3; ++k)
      for (int trial = 0; trial < (n == 2 ? 10 : 5); ++trial) {
        double lam = 2.0 * rnd() - 1.0;
        double mu = 2.0 * rnd() - 1.0;
        if (std::fabs(mu - lam) < 0.05) continue;
        double lhs = phi_det(g, k + 1, lam, mu);
        double lam2 = (-lam * lam + (n - 1) * mu * mu + (2 - n) * lam * mu + n * (n - 1.0)) /
                      (mu - lam);
        double mu2 = -double(n) / (mu - lam);
        double exponent = (n - 1) * std::pow(double(n), k);
        double rhs = std::pow(mu - lam, exponent) * phi_det(g, k, lam2, mu2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));

        // conjugation invariant of the recursion
        CHECK(lam2 + (n - 1) * mu2 == doctest::Approx(lam + (n - 1) * mu).epsilon(1e-12));
      }
  }
}

TEST_CASE("closed form spectrum") {
  SpectrumAtomList k0 = closed_form_spectrum(2, 0);
  REQUIRE(k0.atoms.size() == 1);
  CHECK(k0.atoms[0].q == 1);
  CHECK(k0.atoms[0].multiplicity == 1);

  SpectrumAtomList k2 = closed_form_spectrum(2, 2);
  CHECK(k2.total_multiplicity() == 4);
  REQUIRE(k2.atoms.size() == 4);
  for (const auto& a : k2.atoms) CHECK(a.multiplicity == 1);

  SpectrumAtomList k3 = closed_form_spectrum(2, 3);
  CHECK(k3.total_multiplicity() == 8);
  for (const auto& a : k3.atoms) {
    long long expect = (a.q == 2) ? 3 : 1;
    CHECK(a.multiplicity == expect);
  }

  // multiplicity depends only on q (symmetry under p <-> q-p)
  SpectrumAtomList big = closed_form_spectrum(3, 6);
  for (const auto& a : big.atoms)
    for (const auto& b : big.atoms)
      if (a.q == b.q) CHECK(a.multiplicity == b.multiplicity);

  // multiplicities sum to n^k
  for (int n = 2; n <= 6; ++n) {
    long long npow = 1;
    for (int k = 0; k <= 8; ++k) {
      CHECK(closed_form_spectrum(n, k).total_multiplicity() == npow);
      npow *= n;
    }
  }
}

TEST_CASE("rearranged multiplicity formula") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= 10; ++k)
      for (int q = 2; q <= k; ++q) {
        Rat rearranged = closed_form_multiplicity_rearranged(n, k, q);
        CHECK(rearranged == Rat(static_cast<long>(closed_form_multiplicity(n, k, q))));
      }
}

TEST_CASE("numeric spectrum") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  auto clusters1 = numeric_spectrum(adjacency_matrix(z2, 1));
  REQUIRE(clusters1.size() == 2);
  CHECK(clusters1[0].first == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(clusters1[1].first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(clusters1[0].second == 1);
  CHECK(clusters1[1].second == 1);

  auto trivial = numeric_spectrum(adjacency_matrix(z2, 0));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].first == doctest::Approx(1.0));

  // n = 2, k = 4: closed form within 1e-9, multiplicities exact
  SpectrumAtomList atoms = closed_form_spectrum(2, 4);
  auto numeric = numeric_spectrum(adjacency_matrix(z2, 4), 1e-9);
  CHECK(spectrum_matches(atoms, numeric, 1e-9));

  // Perron eigenvalue: top cluster is 1 with multiplicity 1
  CHECK(numeric.back().first == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(numeric.back().second == 1);
}

TEST_CASE("eigensolver engines agree") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  for (int k = 2; k <= 5; ++k) {
    LevelMatrix a = adjacency_matrix(z2, k);
    std::vector<double> dense = a.dense(0.25);
    std::vector<double> jac = jacobi_eigenvalues(dense, a.dim);
    std::vector<double> hh = householder_eigenvalues(dense, a.dim);
    REQUIRE(jac.size() == hh.size());
    for (size_t i = 0; i < jac.size(); ++i) CHECK(std::fabs(jac[i] - hh[i]) < 1e-10);
  }

  unsigned long seed = 5;
  auto rnd = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return (seed >> 33) / 2147483648.0 - 0.5;
  };
  const int dim = 24;
  std::vector<double> m(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) m[i * dim + j] = m[j * dim + i] = rnd();
  std::vector<double> jac = jacobi_eigenvalues(m, dim);
  std::vector<double> hh = householder_eigenvalues(m, dim);
  for (int i = 0; i < dim; ++i) CHECK(std::fabs(jac[i] - hh[i]) < 1e-11);
}
