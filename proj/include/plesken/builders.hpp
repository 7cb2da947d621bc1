#pragma once

#include <plesken/algebra.hpp>
#include <plesken/diagrams.hpp>

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace plesken {

/// Largest n accepted by the diagram-algebra builders unless overridden.
inline constexpr int default_size_cap = 6;

// ---------------------------------------------------------------------------
// Quaternions

/// Real quaternions on the basis {1, i, j, k} with conjugation. The labels
/// i, j, k are basis elements, unrelated to the scalar imaginary unit.
inline AlgebraWithInvolution quaternions() {
  StructureTable t(4);
  // Hamilton's rules: sign and result index for e_a e_b, a,b in {1,i,j,k}.
  constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  constexpr int result[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t.add(a, b, result[a][b], sign[a][b]);

  AntiInvolution conj{Matrix::identity(4)};
  for (std::size_t k = 1; k < 4; ++k) conj.matrix(k, k) = -1;
  return {Algebra("quaternions", {"1", "i", "j", "k"}, std::move(t), unit_vector(4, 0)), std::move(conj)};
}

/// The ground field as a 1-dimensional algebra, with the identity or (when
/// `conjugation`) complex conjugation as involution.
inline AlgebraWithInvolution scalar_field(bool conjugation = false) {
  StructureTable t(1);
  t.add(0, 0, 0, 1);
  return {Algebra(conjugation ? "scalars (conjugation)" : "scalars", {"1"}, std::move(t), unit_vector(1, 0)),
          AntiInvolution{Matrix::identity(1), conjugation}};
}

// ---------------------------------------------------------------------------
// Matrix algebras

enum class MatrixInvolution { transpose, conj_transpose };

inline std::string matrix_unit_label(std::size_t r, std::size_t s) {
  return "E[" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "]";
}

/// M(n) on matrix units E[r,s] in row-major order.
inline AlgebraWithInvolution matrix_algebra(int n, MatrixInvolution kind) {
  if (n < 1) throw std::invalid_argument("matrix algebra needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  const std::size_t dim = m * m;
  auto idx = [m](std::size_t r, std::size_t s) { return r * m + s; };

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) labels.push_back(matrix_unit_label(r, s));

  StructureTable t(dim);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t v = 0; v < m; ++v) t.add(idx(r, s), idx(s, v), idx(r, v), 1);

  Vector unit(dim);
  for (std::size_t r = 0; r < m; ++r) unit[idx(r, r)] = 1;

  AntiInvolution sigma{Matrix(dim, dim), kind == MatrixInvolution::conj_transpose};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) sigma.matrix(idx(s, r), idx(r, s)) = 1;

  std::string name = "matrix n=" + std::to_string(n) +
                     (kind == MatrixInvolution::transpose ? " transpose" : " conj-transpose");
  return {Algebra(std::move(name), std::move(labels), std::move(t), std::move(unit)), std::move(sigma)};
}

/// M(n, A) with sigma_n(E[r,s] (x) a) = E[s,r] (x) sigma(a). Basis index is
/// (r*n + s)*dim(A) + i for E[r,s] (x) e_i.
inline AlgebraWithInvolution matrix_over_algebra(int n, const AlgebraWithInvolution& inner) {
  if (n < 1) throw std::invalid_argument("matrix-over algebra needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  const Algebra& a = inner.algebra;
  const std::size_t d = a.dim();
  const std::size_t dim = m * m * d;
  auto idx = [m, d](std::size_t r, std::size_t s, std::size_t i) { return (r * m + s) * d + i; };

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t i = 0; i < d; ++i) labels.push_back(matrix_unit_label(r, s) + "*" + a.labels()[i]);

  StructureTable t(dim);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t v = 0; v < m; ++v)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (const auto& term : a.product(i, j)) t.add(idx(r, s, i), idx(s, v, j), idx(r, v, term.index), term.coeff);

  Vector unit(dim);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < d; ++i) unit[idx(r, r, i)] = a.unit()[i];

  AntiInvolution sigma{Matrix(dim, dim), inner.involution.semilinear};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) sigma.matrix(idx(s, r, k), idx(r, s, i)) = inner.involution.matrix(k, i);

  std::string name = "matrix-over n=" + std::to_string(n) + " (" + a.name() + ")";
  return {Algebra(std::move(name), std::move(labels), std::move(t), std::move(unit)), std::move(sigma)};
}

// ---------------------------------------------------------------------------
// Group algebras

/// Multiplication table of a finite group, validated on construction.
class GroupTable {
 public:
  GroupTable(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> product)
      : labels_(std::move(labels)), product_(std::move(product)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("group table: empty group");
    detail::check_labels(labels_);
    if (product_.size() != n) throw std::invalid_argument("group table: table has wrong number of rows");
    for (const auto& row : product_) {
      if (row.size() != n) throw std::invalid_argument("group table: table row has wrong length");
      for (auto x : row)
        if (x >= n) throw std::invalid_argument("group table: closure fails, entry out of range");
    }
    std::size_t e = n;
    for (std::size_t g = 0; g < n && e == n; ++g) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = product_[g][x] == x && product_[x][g] == x;
      if (ok) e = g;
    }
    if (e == n) throw std::invalid_argument("group table: no identity element");
    identity_ = e;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (product_[product_[a][b]][c] != product_[a][product_[b][c]])
            throw std::invalid_argument("group table: associativity fails at (" + labels_[a] + "," + labels_[b] + "," +
                                        labels_[c] + ")");
    inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h)
        if (product_[g][h] == e && product_[h][g] == e) inverse_[g] = h;
      if (inverse_[g] == n) throw std::invalid_argument("group table: element " + labels_[g] + " has no inverse");
    }
  }

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return product_; }
  std::size_t product(std::size_t g, std::size_t h) const { return product_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  std::size_t identity() const { return identity_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> product_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Group algebra KG with sigma(g) = g^{-1}.
inline AlgebraWithInvolution group_algebra(const GroupTable& g, std::string name = "group") {
  const std::size_t n = g.order();
  StructureTable t(n);
  AntiInvolution sigma{Matrix(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.add(a, b, g.product(a, b), 1);
    sigma.matrix(g.inverse(a), a) = 1;
  }
  return {Algebra(std::move(name), g.labels(), std::move(t), unit_vector(n, g.identity())), std::move(sigma)};
}

// ---------------------------------------------------------------------------
// Diagram algebras

namespace detail {

inline void check_diagram_size(int n, int cap, const char* family) {
  if (n < 1) throw std::invalid_argument(std::string(family) + " needs n >= 1");
  if (n > cap)
    throw std::invalid_argument(std::string(family) + " n=" + std::to_string(n) + " exceeds size cap " +
                                std::to_string(cap));
}

/// Builds the algebra of a diagram monoid-with-scalars: `product(a, b)`
/// returns (scalar, diagram) for basis diagrams a, b.
template <typename Diagram, typename Product>
AlgebraWithInvolution diagram_algebra(std::string name, const std::vector<Diagram>& basis, const Diagram& identity,
                                      Product product) {
  const std::size_t dim = basis.size();
  std::map<Diagram, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(basis[k], k);

  std::vector<std::string> labels;
  for (const auto& d : basis) labels.push_back(d.label());

  StructureTable t(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto [coeff, d] = product(basis[a], basis[b]);
      if (!coeff.is_zero()) t.set(a, b, {Term{index.at(d), coeff}});
    }

  AntiInvolution sigma{Matrix(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) sigma.matrix(index.at(basis[k].flipped()), k) = 1;

  auto unit_it = index.find(identity);
  if (unit_it == index.end()) throw consistency_error(name + ": identity diagram missing from basis");
  Vector unit = unit_vector(dim, unit_it->second);
  return {Algebra(std::move(name), std::move(labels), std::move(t), std::move(unit)), std::move(sigma)};
}

}  // namespace detail

/// PR(n): basis all planar rook diagrams, product by concatenation.
inline AlgebraWithInvolution planar_rook(int n, int cap = default_size_cap) {
  detail::check_diagram_size(n, cap, "planar-rook");
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return detail::diagram_algebra("planar-rook n=" + std::to_string(n), enumerate_planar_rook(n),
                                 PlanarRookDiagram{all, all}, [](const PlanarRookDiagram& a, const PlanarRookDiagram& b) {
                                   return std::pair{Scalar(1), compose(a, b)};
                                 });
}

/// TL_delta(n): concatenation with each closed loop replaced by the scalar delta.
inline AlgebraWithInvolution temperley_lieb(int n, const Scalar& delta, int cap = default_size_cap) {
  detail::check_diagram_size(n, cap, "temperley-lieb");
  std::vector<Scalar> powers{Scalar(1)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * delta);
  std::vector<std::pair<int, int>> straight;
  for (int k = 1; k <= n; ++k) straight.emplace_back(k, n + k);
  return detail::diagram_algebra("temperley-lieb n=" + std::to_string(n) + " delta=" + delta.str(),
                                 enumerate_temperley_lieb(n), TLDiagram::from_pairs(n, straight), [&powers](const TLDiagram& a, const TLDiagram& b) {
                                   auto p = compose(a, b);
                                   return std::pair{powers.at(p.loops), std::move(p.diagram)};
                                 });
}

}  // namespace plesken
