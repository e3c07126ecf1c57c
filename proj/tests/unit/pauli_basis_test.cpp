// Copyright 2026 The irrcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irrcorr/pauli_basis.hpp"

#include <cmath>
#include <set>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "irrcorr/error.hpp"
#include "irrcorr/hermitian.hpp"
#include "irrcorr/random_state.hpp"

using namespace irrcorr;

TEST(pauli_basis, enumerate_single_party) {
  const auto idx = enumerate_indices(1);
  ASSERT_EQ(idx.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(idx[static_cast<std::size_t>(i)], MultiIndex{i});
}

TEST(pauli_basis, enumerate_three_parties_starts_at_identity) {
  const auto idx = enumerate_indices(3);
  ASSERT_EQ(idx.size(), 64u);
  EXPECT_EQ(idx[0], (MultiIndex{0, 0, 0}));
  EXPECT_EQ(idx[1], (MultiIndex{0, 0, 1}));
  EXPECT_EQ(idx.back(), (MultiIndex{3, 3, 3}));
  for (std::size_t i = 0; i < idx.size(); ++i) EXPECT_EQ(idx[i].position(), i);
}

TEST(pauli_basis, base4_position) {
  EXPECT_EQ((MultiIndex{3, 0}).position(), 12u);
  EXPECT_EQ(enumerate_indices(2)[12], (MultiIndex{3, 0}));
  EXPECT_EQ(MultiIndex::from_position(3, 48), (MultiIndex{3, 0, 0}));
}

TEST(pauli_basis, party_count_range) {
  EXPECT_THROW(enumerate_indices(0), InvalidArgument);
  EXPECT_THROW(enumerate_indices(kMaxParties + 1), InvalidArgument);
  EXPECT_NO_THROW(enumerate_indices(kMaxParties));
}

TEST(pauli_basis, n_zero_and_weight) {
  EXPECT_EQ(n_zero(MultiIndex{0, 0, 0}), 3);
  EXPECT_EQ(n_zero(MultiIndex{3, 3, 0}), 1);
  EXPECT_EQ(n_zero(MultiIndex{3, 0, 3}), 1);
  EXPECT_EQ((MultiIndex{3, 3, 1}).weight(), 3);
  EXPECT_TRUE((MultiIndex{0, 0}).is_identity());
}

TEST(pauli_basis, parse_and_str) {
  EXPECT_EQ(MultiIndex::parse("330"), (MultiIndex{3, 3, 0}));
  EXPECT_EQ((MultiIndex{0, 2, 1}).str(), "021");
  EXPECT_THROW(MultiIndex::parse("34"), InvalidArgument);
  EXPECT_THROW(MultiIndex::parse("3a"), InvalidArgument);
  EXPECT_THROW(MultiIndex::parse(""), InvalidArgument);
  EXPECT_THROW((MultiIndex{0, 4}), InvalidArgument);
}

TEST(pauli_basis, identity_operator) {
  const auto op = pauli_operator(MultiIndex{0});
  EXPECT_EQ(op.matrix, Matrix::Identity(2, 2));
}

TEST(pauli_basis, x_on_first_of_two) {
  const auto op = pauli_operator(MultiIndex{1, 0});
  EXPECT_EQ(op.matrix.trace(), Complex(0.0));
  EXPECT_EQ((op.matrix * op.matrix).trace(), Complex(4.0));
  EXPECT_EQ(op.matrix(0, 2), Complex(1.0));
  EXPECT_EQ(op.matrix(3, 1), Complex(1.0));
}

TEST(pauli_basis, zz_identity_is_diagonal_with_expected_signs) {
  const auto op = pauli_operator(MultiIndex{3, 3, 0});
  const double expected[] = {1, 1, -1, -1, -1, -1, 1, 1};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      EXPECT_EQ(op.matrix(r, c), r == c ? Complex(expected[r]) : Complex(0.0));
    }
  }
}

TEST(pauli_basis, sigma_y_convention) {
  const auto y = pauli_operator(MultiIndex{2}).matrix;
  EXPECT_EQ(y(0, 1), Complex(0, -1));
  EXPECT_EQ(y(1, 0), Complex(0, 1));
}

TEST(pauli_basis, hs_inner_examples) {
  EXPECT_DOUBLE_EQ(hs_inner(pauli_operator(MultiIndex{3}).matrix, pauli_operator(MultiIndex{3}).matrix), 2.0);
  EXPECT_DOUBLE_EQ(hs_inner(pauli_operator(MultiIndex{1}).matrix, pauli_operator(MultiIndex{2}).matrix), 0.0);
  EXPECT_DOUBLE_EQ(hs_inner(Matrix::Identity(8, 8) / 8.0, pauli_operator(MultiIndex{3, 3, 0}).matrix), 0.0);
}

TEST(pauli_basis, hs_inner_errors) {
  EXPECT_THROW(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(4, 4)), InvalidArgument);
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  b(1, 0) = Complex(0, 1);
  EXPECT_THROW(hs_inner(a, b), InvalidArgument);
}

// Exhaustive orthogonality, Hermiticity and spectrum for n <= 3.
TEST(pauli_basis, orthogonal_hermitian_involutions) {
  for (int n = 1; n <= 3; ++n) {
    const auto& basis = PauliBasis::for_parties(n);
    std::vector<Matrix> dense;
    for (const auto& t : basis.terms()) dense.push_back(t.dense());
    const double dim = basis.dimension();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      EXPECT_EQ(dense[i], dense[i].adjoint());
      EXPECT_EQ(dense[i] * dense[i], Matrix::Identity(basis.dimension(), basis.dimension()));
      if (i > 0) EXPECT_EQ(dense[i].trace(), Complex(0.0));
      for (std::size_t j = 0; j < dense.size(); ++j) {
        const Complex tr = (dense[i] * dense[j]).trace();
        EXPECT_EQ(tr, Complex(i == j ? dim : 0.0)) << i << "," << j;
      }
    }
  }
}

TEST(pauli_basis, cached_term_matches_kronecker_product) {
  Matrix expected = pauli_operator(MultiIndex{2}).matrix;
  expected = kron(expected, pauli_operator(MultiIndex{1}).matrix);
  expected = kron(expected, pauli_operator(MultiIndex{3}).matrix);
  EXPECT_EQ(PauliBasis::for_parties(3).term(MultiIndex{2, 1, 3}.position()).dense(), expected);
  EXPECT_EQ(pauli_operator(MultiIndex{2, 1, 3}).matrix, expected);
}

TEST(pauli_basis, basis_spans_hermitian_matrices) {
  Rng rng(11);
  for (int n = 1; n <= 3; ++n) {
    const auto& basis = PauliBasis::for_parties(n);
    const int dim = basis.dimension();
    for (int trial = 0; trial < 5; ++trial) {
      Matrix z = Matrix::Random(dim, dim);
      const Matrix h = (z + z.adjoint()) * 0.5;
      Matrix rebuilt = Matrix::Zero(dim, dim);
      for (const auto& t : basis.terms()) {
        t.accumulate(t.trace_with(h) / dim, rebuilt);
      }
      EXPECT_LT(max_abs_diff(rebuilt, h), 1e-12);
    }
  }
}

TEST(pauli_basis, trace_with_matches_dense_trace) {
  Rng rng(3);
  const DensityMatrix rho = random_state(3, rng);
  for (const auto& t : PauliBasis::for_parties(3).terms()) {
    EXPECT_NEAR(t.trace_with(rho.matrix()), (rho.matrix() * t.dense()).trace().real(), 1e-14);
  }
}

TEST(pauli_basis, cache_is_shared_across_threads) {
  std::vector<const PauliBasis*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&seen, i] { seen[i] = &PauliBasis::for_parties(4); });
  }
  for (auto& t : threads) t.join();
  const std::set<const PauliBasis*> distinct(seen.begin(), seen.end());
  EXPECT_EQ(distinct.size(), 1u);
  EXPECT_EQ((*seen[0]).size(), 256u);
}
