#pragma once

#include <plesken/matrix.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace plesken {

/// Raised when an internal cross-check fails on inputs that satisfied
/// every documented precondition.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Term {
  std::size_t index;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector: terms with strictly increasing indices and nonzero coefficients.
using SparseVector = std::vector<Term>;

inline SparseVector to_sparse(std::span<const Scalar> v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

inline Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& t : v) out.at(t.index) += t.coeff;
  return out;
}

/// Structure constants c_{ij}^k stored as one sparse vector per ordered pair.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const SparseVector& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Adds c to the coefficient of e_k in the (i,j) entry.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::invalid_argument("structure index out of range");
    if (c.is_zero()) return;
    auto& v = entries_[i * dim_ + j];
    auto it = v.begin();
    while (it != v.end() && it->index < k) ++it;
    if (it != v.end() && it->index == k) {
      it->coeff += c;
      if (it->coeff.is_zero()) v.erase(it);
    } else {
      v.insert(it, Term{k, c});
    }
  }

  void set(std::size_t i, std::size_t j, SparseVector v) { entries_.at(i * dim_ + j) = std::move(v); }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> entries_;
};

namespace detail {

inline void check_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
}

/// acc += c * (x * y) over a structure table, touching only nonzero entries.
inline void accumulate_product(Vector& acc, const StructureTable& table, const Scalar& c, std::span<const Scalar> x,
                               std::span<const Scalar> y) {
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) nx.push_back(i);
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!y[j].is_zero()) ny.push_back(j);
  for (auto i : nx)
    for (auto j : ny) {
      const auto& terms = table.at(i, j);
      if (terms.empty()) continue;
      Scalar w = x[i] * y[j];
      if (!c.is_one()) w *= c;
      for (const auto& t : terms) acc[t.index] += w * t.coeff;
    }
}

}  // namespace detail

/// Finite-dimensional associative algebra with a labelled basis and unit.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::vector<std::string> labels, StructureTable table, Vector unit)
      : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    detail::check_labels(labels_);
    if (table_.dim() != labels_.size()) throw std::invalid_argument("structure table size does not match basis");
    if (unit_.size() != labels_.size()) throw std::invalid_argument("unit vector length does not match basis");
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTable& table() const { return table_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  const Vector& unit() const { return unit_; }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  StructureTable table_;
  Vector unit_;
};

inline Vector multiply(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw std::invalid_argument("multiply: element dimension mismatch");
  Vector out(a.dim());
  detail::accumulate_product(out, a.table(), Scalar(1), x, y);
  return out;
}

inline Vector commutator(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector out(a.dim());
  detail::accumulate_product(out, a.table(), Scalar(1), x, y);
  detail::accumulate_product(out, a.table(), Scalar(-1), y, x);
  return out;
}

/// Anti-involution sigma acting on coefficient vectors as x -> M x, or
/// x -> M conj(x) when `semilinear` (e.g. conjugate transposition).
struct AntiInvolution {
  Matrix matrix;
  bool semilinear = false;

  Vector apply(std::span<const Scalar> x) const {
    if (!semilinear) return matrix * x;
    Vector c(x.begin(), x.end());
    return matrix * conj(std::move(c));
  }

  /// True when every column has exactly one nonzero entry, equal to 1.
  bool is_permutation() const {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      std::size_t ones = 0;
      for (std::size_t r = 0; r < matrix.rows(); ++r) {
        const auto& x = matrix(r, c);
        if (x.is_zero()) continue;
        if (!x.is_one()) return false;
        ++ones;
      }
      if (ones != 1) return false;
    }
    return true;
  }

  friend bool operator==(const AntiInvolution&, const AntiInvolution&) = default;
};

struct AlgebraWithInvolution {
  Algebra algebra;
  AntiInvolution involution;
};

namespace detail {

/// Sorts terms by index, merges duplicates and drops zeros.
inline SparseVector normalize(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& t : v) {
    if (!out.empty() && out.back().index == t.index)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff.is_zero()) out.pop_back();
  }
  return out;
}

}  // namespace detail

/// First basis triple (i,j,k) in lexicographic order with (e_i e_j) e_k != e_i (e_j e_k).
inline std::optional<std::array<std::size_t, 3>> validate_associativity(const Algebra& a) {
  const std::size_t n = a.dim();
  SparseVector lhs, rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        lhs.clear();
        rhs.clear();
        for (const auto& t : a.product(i, j))
          for (const auto& u : a.product(t.index, k)) lhs.push_back({u.index, t.coeff * u.coeff});
        for (const auto& t : a.product(j, k))
          for (const auto& u : a.product(i, t.index)) rhs.push_back({u.index, t.coeff * u.coeff});
        if (detail::normalize(lhs) != detail::normalize(rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

/// Checks the unit axiom on every basis element; returns the first failing index.
inline std::optional<std::size_t> validate_unit(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector e = a.basis_vector(i);
    if (multiply(a, a.unit(), e) != e || multiply(a, e, a.unit()) != e) return i;
  }
  return std::nullopt;
}

struct InvolutionFailure {
  enum class Kind { shape, not_involutive, not_anti_multiplicative };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::shape:
        return "involution matrix has the wrong shape";
      case Kind::not_involutive:
        return "sigma(sigma(e_" + std::to_string(i) + ")) != e_" + std::to_string(i);
      case Kind::not_anti_multiplicative:
        return "sigma(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != sigma(e_" + std::to_string(j) +
               ") sigma(e_" + std::to_string(i) + ")";
    }
    return {};
  }
};

/// Verifies sigma^2 = id on the basis and sigma(e_i e_j) = sigma(e_j) sigma(e_i) on all pairs.
inline std::optional<InvolutionFailure> validate_involution(const Algebra& a, const AntiInvolution& s) {
  const std::size_t n = a.dim();
  if (s.matrix.rows() != n || s.matrix.cols() != n) return InvolutionFailure{InvolutionFailure::Kind::shape};

  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = s.matrix.column(i);
    if (s.apply(images[i]) != a.basis_vector(i)) return InvolutionFailure{InvolutionFailure::Kind::not_involutive, i};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = s.apply(to_dense(a.product(i, j), n));
      Vector rhs = multiply(a, images[j], images[i]);
      if (lhs != rhs) return InvolutionFailure{InvolutionFailure::Kind::not_anti_multiplicative, i, j};
    }
  return std::nullopt;
}

/// Human-readable linear combination of basis labels, e.g. "E[1,2] - E[2,1]".
inline std::string format_element(const std::vector<std::string>& labels, std::span<const Scalar> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Scalar c = v[k];
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!c.is_one()) out += c.is_real() ? c.str() + "*" : "(" + c.str() + ")*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace plesken
