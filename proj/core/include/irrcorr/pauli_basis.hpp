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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace irrcorr {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Largest supported party count. 4^6 basis operators of size 64x64.
inline constexpr int kMaxParties = 6;

/// Number of basis operators (4^n) for n parties.
constexpr std::size_t index_count(int n) { return std::size_t{1} << (2 * n); }
/// Hilbert-space dimension (2^n) for n parties.
constexpr int dimension_of(int n) { return 1 << n; }

void require_party_count(int n);

/// Per-party Pauli labels (m_1, ..., m_n), each in {0,1,2,3} where 0 is the
/// identity and 1,2,3 are sigma_x, sigma_y, sigma_z. Party 0 is the leftmost
/// Kronecker factor.
class MultiIndex {
 public:
  explicit MultiIndex(std::span<const int> labels);
  MultiIndex(std::initializer_list<int> labels);

  /// Digit string such as "330"; one character per party.
  static MultiIndex parse(std::string_view digits);
  /// Inverse of position(): the index at a given base-4 lexicographic slot.
  static MultiIndex from_position(int n, std::size_t position);
  static MultiIndex identity(int n);

  int party_count() const noexcept { return n_; }
  int operator[](int party) const { return labels_[static_cast<std::size_t>(party)]; }

  /// Lexicographic base-4 position; the all-zero index sits at 0.
  std::size_t position() const noexcept;
  int n_zero() const noexcept;
  /// Number of parties carrying a non-identity factor, n - N0(m).
  int weight() const noexcept { return n_ - n_zero(); }
  bool is_identity() const noexcept { return n_zero() == n_; }

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.position() <=> b.position();
  }

 private:
  MultiIndex() = default;
  std::array<std::uint8_t, kMaxParties> labels_{};
  int n_ = 0;
};

/// All 4^n indices in base-4 lexicographic order, starting with 0...0.
std::vector<MultiIndex> enumerate_indices(int n);

/// Number of identity labels in m.
int n_zero(const MultiIndex& m);

/// Tensor-product Pauli operator with its exact dense matrix.
struct BasisOperator {
  MultiIndex index;
  Matrix matrix;
};

BasisOperator pauli_operator(const MultiIndex& m);

/// Tr(a b) for Hermitian a, b. Throws when the imaginary part is not
/// negligible relative to 1e-12 * max(1, |a|_F |b|_F).
double hs_inner(const Matrix& a, const Matrix& b);

/// A Pauli string has exactly one nonzero entry per row, at column
/// row ^ flip_mask, with value phase[row] in {+1,-1,+i,-i}. Storing that form
/// keeps the basis exact and makes traces O(2^n).
struct PauliTerm {
  MultiIndex index;
  std::uint32_t flip_mask = 0;
  std::vector<Complex> phase;

  Matrix dense() const;
  /// Re Tr(m sigma).
  double trace_with(const Matrix& m) const;
  /// h += coefficient * sigma.
  void accumulate(double coefficient, Matrix& h) const;
};

/// Process-wide cache of the exact basis for one party count. Built once per
/// n on first use; safe under concurrent first access.
class PauliBasis {
 public:
  static const PauliBasis& for_parties(int n);

  int party_count() const noexcept { return n_; }
  int dimension() const noexcept { return dimension_of(n_); }
  std::size_t size() const noexcept { return terms_.size(); }

  const PauliTerm& term(std::size_t position) const { return terms_.at(position); }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }

  explicit PauliBasis(int n);

 private:
  int n_;
  std::vector<PauliTerm> terms_;
};

}  // namespace irrcorr
