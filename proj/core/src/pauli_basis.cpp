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

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "irrcorr/error.hpp"

namespace irrcorr {

void require_party_count(int n) {
  if (n < 1 || n > kMaxParties) {
    throw InvalidArgument("party count " + std::to_string(n) +
                          " outside supported range [1, " +
                          std::to_string(kMaxParties) + "]");
  }
}

MultiIndex::MultiIndex(std::span<const int> labels) {
  require_party_count(static_cast<int>(labels.size()));
  n_ = static_cast<int>(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] > 3) {
      throw InvalidArgument("Pauli label " + std::to_string(labels[i]) +
                            " not in {0,1,2,3}");
    }
    labels_[i] = static_cast<std::uint8_t>(labels[i]);
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> labels)
    : MultiIndex(std::span<const int>(labels.begin(), labels.size())) {}

MultiIndex MultiIndex::parse(std::string_view digits) {
  std::vector<int> labels;
  labels.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '3') {
      throw InvalidArgument("invalid multi-index \"" + std::string(digits) +
                            "\": digits must be 0-3");
    }
    labels.push_back(c - '0');
  }
  return MultiIndex(labels);
}

MultiIndex MultiIndex::from_position(int n, std::size_t position) {
  require_party_count(n);
  if (position >= index_count(n)) {
    throw InvalidArgument("position out of range for party count");
  }
  MultiIndex m;
  m.n_ = n;
  for (int p = n - 1; p >= 0; --p) {
    m.labels_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(position & 3u);
    position >>= 2;
  }
  return m;
}

MultiIndex MultiIndex::identity(int n) { return from_position(n, 0); }

std::size_t MultiIndex::position() const noexcept {
  std::size_t pos = 0;
  for (int p = 0; p < n_; ++p) pos = (pos << 2) | labels_[static_cast<std::size_t>(p)];
  return pos;
}

int MultiIndex::n_zero() const noexcept {
  return static_cast<int>(std::count(labels_.begin(), labels_.begin() + n_, 0));
}

std::string MultiIndex::str() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_));
  for (int p = 0; p < n_; ++p) s.push_back(static_cast<char>('0' + (*this)[p]));
  return s;
}

std::vector<MultiIndex> enumerate_indices(int n) {
  require_party_count(n);
  std::vector<MultiIndex> out;
  out.reserve(index_count(n));
  for (std::size_t pos = 0; pos < index_count(n); ++pos) {
    out.push_back(MultiIndex::from_position(n, pos));
  }
  return out;
}

int n_zero(const MultiIndex& m) { return m.n_zero(); }

namespace {

PauliTerm make_term(const MultiIndex& m) {
  const int n = m.party_count();
  const int dim = dimension_of(n);
  PauliTerm t{m, 0u, std::vector<Complex>(static_cast<std::size_t>(dim), Complex(1.0, 0.0))};
  for (int p = 0; p < n; ++p) {
    const int shift = n - 1 - p;
    const int label = m[p];
    if (label == 1 || label == 2) t.flip_mask |= (1u << shift);
    for (int row = 0; row < dim; ++row) {
      const int bit = (row >> shift) & 1;
      Complex& ph = t.phase[static_cast<std::size_t>(row)];
      if (label == 2) {
        // sigma_y = [[0, -i], [i, 0]]
        ph *= bit == 0 ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
      } else if (label == 3 && bit == 1) {
        ph = -ph;
      }
    }
  }
  return t;
}

}  // namespace

Matrix PauliTerm::dense() const {
  const auto dim = static_cast<Eigen::Index>(phase.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    out(row, row ^ static_cast<Eigen::Index>(flip_mask)) = phase[static_cast<std::size_t>(row)];
  }
  return out;
}

double PauliTerm::trace_with(const Matrix& m) const {
  // Tr(m sigma) = sum_r sigma(r, r^f) m(r^f, r)
  double acc = 0.0;
  const auto dim = static_cast<Eigen::Index>(phase.size());
  for (Eigen::Index row = 0; row < dim; ++row) {
    const Complex v = phase[static_cast<std::size_t>(row)] *
                      m(row ^ static_cast<Eigen::Index>(flip_mask), row);
    acc += v.real();
  }
  return acc;
}

void PauliTerm::accumulate(double coefficient, Matrix& h) const {
  const auto dim = static_cast<Eigen::Index>(phase.size());
  for (Eigen::Index row = 0; row < dim; ++row) {
    h(row, row ^ static_cast<Eigen::Index>(flip_mask)) +=
        coefficient * phase[static_cast<std::size_t>(row)];
  }
}

BasisOperator pauli_operator(const MultiIndex& m) {
  return BasisOperator{m, make_term(m).dense()};
}

double hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidArgument("hs_inner: dimension mismatch");
  }
  const Complex tr = (a * b).trace();
  const double scale = std::max(1.0, a.norm() * b.norm());
  if (std::abs(tr.imag()) > 1e-12 * scale) {
    throw InvalidArgument("hs_inner: imaginary part " + std::to_string(tr.imag()) +
                          " is not negligible; inputs are not Hermitian");
  }
  return tr.real();
}

PauliBasis::PauliBasis(int n) : n_(n) {
  require_party_count(n);
  terms_.reserve(index_count(n));
  for (const auto& m : enumerate_indices(n)) terms_.push_back(make_term(m));
}

const PauliBasis& PauliBasis::for_parties(int n) {
  require_party_count(n);
  static std::array<std::once_flag, kMaxParties + 1> flags;
  static std::array<std::unique_ptr<PauliBasis>, kMaxParties + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { cache[slot] = std::make_unique<PauliBasis>(n); });
  return *cache[slot];
}

}  // namespace irrcorr
