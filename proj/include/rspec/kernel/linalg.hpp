#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "rspec/kernel/hermite.hpp"
#include "rspec/kernel/ring.hpp"

namespace rspec {

/// A vector in R^rank.
using Column = std::vector<Poly>;

/// Column-major matrix over a ring; `rows` is kept explicitly so that
/// matrices with no columns still know their height.
struct Matrix {
  std::size_t rows = 0;
  std::vector<Column> cols;

  Matrix() = default;
  Matrix(std::size_t r, std::vector<Column> c) : rows(r), cols(std::move(c)) {}
  static Matrix zero(std::size_t r, std::size_t c);
  static Matrix identity(const Ring& ring, std::size_t n);

  std::size_t ncols() const { return cols.size(); }
  const Poly& at(std::size_t r, std::size_t c) const { return cols[c][r]; }
  Poly& at(std::size_t r, std::size_t c) { return cols[c][r]; }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b);
Column mat_vec(const Ring& ring, const Matrix& a, const Column& v);
Matrix transpose(const Matrix& a);
/// Horizontal concatenation; both must have the same row count.
Matrix hcat(const Matrix& a, const Matrix& b);
/// Block diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Kronecker product a (x) I_n.
Matrix kron_identity(const Ring& ring, const Matrix& a, std::size_t n);
Column zero_column(std::size_t n);
Column unit_column(const Ring& ring, std::size_t n, std::size_t i);
bool is_zero_column(const Column& c);
Matrix drop_zero_columns(const Matrix& m);

/// Generators of the syzygy module {s in R^m : sum_j s_j gens_j = 0}
/// over R (quotient-aware), entries in canonical form.
std::vector<Column> syzygies(const Ring& ring, const std::vector<Column>& gens, std::size_t rank);

/// A submodule of R^rank, prepared for membership tests and canonical
/// comparison. Over Z and Z/n it holds the Hermite form of the lifted
/// lattice; over field-coefficient polynomial rings it holds a reduced
/// module Groebner basis (quotient relations included).
class Span {
 public:
  Span(const Ring& ring, const std::vector<Column>& gens, std::size_t rank);

  std::size_t rank() const { return rank_; }
  bool contains(const Column& v) const;
  bool contains_all(const std::vector<Column>& vs) const;
  /// Canonical generating set; equal spans give identical output.
  const std::vector<Column>& canonical() const { return canonical_; }
  /// Normal form of v modulo the span (FieldPoly engine only).
  Column reduce(const Column& v) const;

 private:
  const Ring* ring_;
  std::size_t rank_;
  HermiteForm hermite_;
  std::vector<MVec> gb_;
  std::vector<Column> canonical_;
};

bool spans_equal(const Ring& ring, const std::vector<Column>& a, const std::vector<Column>& b, std::size_t rank);

/// Conversions used by the engines.
MVec column_to_mvec(const Ring& ring, const Column& c, int offset = 0);
Column mvec_to_column(const Ring& ring, const MVec& v, std::size_t rank, int offset = 0);
IntCol column_to_int(const Ring& ring, const Column& c);
Column int_to_column(const Ring& ring, const IntCol& c);

void require_computable(const Ring& ring);

}  // namespace rspec
