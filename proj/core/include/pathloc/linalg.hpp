#pragma once

// Exact sparse linear algebra over the rationals.
//
// Integers are 64-bit with overflow checking, so every result is exact or
// the computation throws; there is no silent wraparound and no rounding.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace pathloc {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    64, 64, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;
using Rational = boost::rational<Integer>;

/// Sparse vector: (column, value) sorted by column, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// a + k * b.
SparseVec axpy(const SparseVec& a, const Rational& k, const SparseVec& b);
Rational entry(const SparseVec& v, std::size_t col);
/// Builds a sparse vector from an unordered accumulation.
SparseVec from_map(const std::map<std::size_t, Rational>& m);

/// Incremental Gaussian elimination. Rows are kept in echelon form with
/// distinct pivots; reduced() returns the reduced row echelon form.
class Eliminator {
 public:
  explicit Eliminator(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns true iff the rank grew.
  bool add(SparseVec row);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// v minus its component in the row space along pivot columns; zero iff
  /// v lies in the row space.
  SparseVec reduce(SparseVec v) const;

  /// RREF rows sorted by pivot column. Each row has value 1 at its pivot
  /// and 0 at every other pivot.
  std::vector<SparseVec> reduced() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of {v : r . v = 0 for every added row r}, one vector per free
  /// column, in column order.
  std::vector<SparseVec> nullspace() const;

 private:
  std::size_t cols_;
  std::vector<SparseVec> rows_;            // creation order
  std::map<std::size_t, std::size_t> by_pivot_;  // pivot column -> row
};

/// RREF basis of the span of `vectors`.
std::vector<SparseVec> span_basis(std::size_t cols, const std::vector<SparseVec>& vectors);

/// Coordinates of v in an RREF basis (v must lie in the span).
std::vector<Rational> coordinates(const std::vector<SparseVec>& rref, const SparseVec& v);

/// Rank of a dense square matrix given row by row.
std::size_t dense_rank(const std::vector<std::vector<Rational>>& m);

}  // namespace pathloc
