#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/matrix.hpp"

namespace qlogic {

/// Closed linear subspace of C^n in canonical form: the basis matrix is
/// the unique RREF of any row-spanning matrix, so two Subspace values
/// are equal iff they are the same subspace. The zero subspace has an
/// empty basis.
class Subspace {
 public:
  static Subspace from_span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    if (ambient_dim == 0) throw ShapeError("ambient dimension must be positive");
    for (const Vector& v : vectors)
      if (v.size() != ambient_dim) throw ShapeError("spanning vector length mismatch");
    if (vectors.empty()) return Subspace(ambient_dim, Matrix(0, ambient_dim));
    return Subspace(ambient_dim, rref(Matrix::from_rows(vectors, ambient_dim)).reduced);
  }

  static Subspace zero(std::size_t ambient_dim) { return from_span(ambient_dim, {}); }

  static Subspace full(std::size_t ambient_dim) {
    if (ambient_dim == 0) throw ShapeError("ambient dimension must be positive");
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool is_trivial() const { return is_zero() || is_full(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// True iff psi lies in the subspace. The zero vector is rejected:
  /// it carries no physical meaning as a state.
  bool contains_state(const Vector& psi) const {
    if (psi.size() != ambient_) throw ShapeError("state vector length mismatch");
    if (is_zero_vector(psi)) throw DomainError("physically meaningless state (zero vector)");
    if (is_zero()) return false;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    rows.push_back(psi);
    return rank(Matrix::from_rows(rows, ambient_)) == dim();
  }

  /// Stable text form; used for node labels and deterministic sorting.
  std::string serialize() const {
    if (is_zero()) return "{0}";
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      if (i) s += ", ";
      s += format_vector(basis_.row(i));
    }
    s += "}";
    return s;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_;
  Matrix basis_;  // RREF, full row rank
};

/// Self-adjoint idempotent operator; the matrix form of a proposition.
class Projection {
 public:
  explicit Projection(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw ShapeError("projection must be square");
    if (m_ != m_.conjugate_transpose()) throw DomainError("projection must be self-adjoint");
    if (matmul(m_, m_) != m_) throw DomainError("projection must be idempotent");
  }

  static Projection identity(std::size_t n) { return Projection(Matrix::identity(n)); }
  static Projection zero(std::size_t n) { return Projection(Matrix::zero(n, n)); }

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

  friend bool operator==(const Projection& a, const Projection& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Projection& a, const Projection& b) { return !(a == b); }

 private:
  Matrix m_;
};

/// ran(P) = {psi : P psi = psi}, canonicalized. dim = rank = trace.
inline Subspace range_of(const Projection& p) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    Vector col(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) col[i] = p.matrix().at(i, j);
    cols.push_back(std::move(col));
  }
  return Subspace::from_span(p.dim(), cols);
}

/// The negation 1 - P.
inline Projection negation(const Projection& p) {
  return Projection(Matrix::identity(p.dim()) - p.matrix());
}

/// ker(P) = ran(1 - P).
inline Subspace kernel_of(const Projection& p) { return range_of(negation(p)); }

/// Orthogonal projection onto S. With C the entrywise conjugate of the
/// basis rows B, the projector onto the row span of B is
/// C^H (C C^H)^-1 C (column-space form over the columns B^T); the zero
/// matrix for {0}.
inline Projection projection_of(const Subspace& s) {
  if (s.is_zero()) return Projection::zero(s.ambient_dim());
  const Matrix c = s.basis().entrywise_conj();
  return Projection(matmul(matmul(c.conjugate_transpose(), gram_inverse(c)), c));
}

/// {x : <b, x> = 0 for all basis rows b}, with the conjugate-linear
/// inner product <u, v> = sum conj(u_k) v_k.
inline Subspace orthocomplement(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return Subspace::from_span(s.ambient_dim(), kernel_basis(s.basis().entrywise_conj()));
}

/// A <= B as sets: rank(stack(B, A)) == dim(B).
inline bool leq(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("subspace ambient mismatch");
  if (a.is_zero()) return true;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < b.basis().rows(); ++i) rows.push_back(b.basis().row(i));
  for (std::size_t i = 0; i < a.basis().rows(); ++i) rows.push_back(a.basis().row(i));
  return rank(Matrix::from_rows(rows, a.ambient_dim())) == b.dim();
}

enum class Order { LeqStrict, GeqStrict, Equal, Incomparable };

inline Order classify_order(const Subspace& a, const Subspace& b) {
  const bool ab = leq(a, b);
  const bool ba = leq(b, a);
  if (ab && ba) return Order::Equal;
  if (ab) return Order::LeqStrict;
  if (ba) return Order::GeqStrict;
  return Order::Incomparable;
}

/// Join = closed span of the union of bases.
inline Subspace join(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("subspace ambient mismatch");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.basis().rows(); ++i) rows.push_back(a.basis().row(i));
  for (std::size_t i = 0; i < b.basis().rows(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::from_span(a.ambient_dim(), rows);
}

/// Meet = intersection, computed De Morgan style as
/// (A^perp v B^perp)^perp; one elimination path shared with join.
inline Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("subspace ambient mismatch");
  return orthocomplement(join(orthocomplement(a), orthocomplement(b)));
}

/// Join via the (A^perp ^ B^perp)^perp formula; cross-check route for
/// the span-concatenation join.
inline Subspace join_de_morgan(const Subspace& a, const Subspace& b) {
  return orthocomplement(meet(orthocomplement(a), orthocomplement(b)));
}

/// Tensor product subspace in C^(n*m), row-major Kronecker convention.
inline Subspace tensor(const Subspace& a, const Subspace& b) {
  const std::size_t ambient = a.ambient_dim() * b.ambient_dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.basis().rows(); ++i)
    for (std::size_t j = 0; j < b.basis().rows(); ++j)
      rows.push_back(kronecker(a.basis().row(i), b.basis().row(j)));
  return Subspace::from_span(ambient, rows);
}

}  // namespace qlogic
