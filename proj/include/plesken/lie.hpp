#pragma once

#include <plesken/algebra.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace plesken {

/// Finite-dimensional Lie algebra given by bracket structure constants.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> labels;
  StructureTable bracket;

  std::size_t dim() const { return labels.size(); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

inline Vector bracket(const LieAlgebra& l, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != l.dim() || y.size() != l.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(l.dim());
  detail::accumulate_product(out, l.bracket, Scalar(1), x, y);
  return out;
}

struct LieFailure {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;

  std::string describe() const {
    if (kind == Kind::antisymmetry)
      return "[e_" + std::to_string(i) + ",e_" + std::to_string(j) + "] != -[e_" + std::to_string(j) + ",e_" +
             std::to_string(i) + "]";
    return "Jacobi identity fails on (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }
};

/// Antisymmetry on all basis pairs (including [e_i,e_i] = 0) and the Jacobi
/// identity on all basis triples.
inline std::optional<LieFailure> validate_lie(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector sum = to_dense(l.bracket.at(i, j), n) + to_dense(l.bracket.at(j, i), n);
      if (!is_zero(sum)) return LieFailure{LieFailure::Kind::antisymmetry, i, j};
    }
  // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, Vector& acc) {
    for (const auto& t : l.bracket.at(b, c))
      for (const auto& u : l.bracket.at(a, t.index)) acc[u.index] += t.coeff * u.coeff;
  };
  Vector acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        for (auto& x : acc) x = 0;
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!is_zero(acc)) return LieFailure{LieFailure::Kind::jacobi, i, j, k};
      }
  return std::nullopt;
}

/// Span of [u, v] over basis vectors u of U and v of V.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  std::vector<Vector> products;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      Vector b = bracket(l, x, y);
      if (!is_zero(b)) products.push_back(std::move(b));
    }
  return Subspace::span(products, l.dim());
}

namespace detail {

template <typename Step>
std::vector<Subspace> iterate_series(const LieAlgebra& l, Step step) {
  std::vector<Subspace> series{Subspace::whole(l.dim())};
  while (series.back().dim() > 0) {
    Subspace next = step(series.back());
    bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

}  // namespace detail

/// L, [L,L], ... until a term repeats (included once more) or vanishes.
inline std::vector<Subspace> derived_series(const LieAlgebra& l) {
  return detail::iterate_series(l, [&](const Subspace& s) { return bracket_span(l, s, s); });
}

/// L, [L,L], [L,[L,L]], ... with the same termination rule as derived_series.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  Subspace whole = Subspace::whole(l.dim());
  return detail::iterate_series(l, [&](const Subspace& s) { return bracket_span(l, whole, s); });
}

/// ad(e_i) as a matrix: column j holds the coordinates of [e_i, e_j].
inline Matrix adjoint(const LieAlgebra& l, std::size_t i) {
  Matrix ad(l.dim(), l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j)
    for (const auto& t : l.bracket.at(i, j)) ad(t.index, j) = t.coeff;
  return ad;
}

/// {x : [x, e_j] = 0 for all j}.
inline Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // Row (j,k), column i: coefficient of e_k in [e_i, e_j].
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : l.bracket.at(i, j)) stacked(j * n + t.index, i) = t.coeff;
  return Subspace::span(kernel_basis(stacked), n);
}

/// K(e_i, e_j) = trace(ad e_i ad e_j).
inline Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(l, i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar tr;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) add_product(tr, ads[i](a, b), ads[j](b, a));
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

/// First basis triple (x,y,z) with K([x,y],z) != K(x,[y,z]), if any.
inline std::optional<std::array<std::size_t, 3>> killing_invariance_failure(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix k = killing_form(l);
  auto form = [&](const SparseVector& v, std::size_t z) {
    Scalar s;
    for (const auto& t : v) add_product(s, t.coeff, k(t.index, z));
    return s;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // K(x,[y,z]) = sum_c [y,z]_c K(x,c), and K is symmetric.
        if (form(l.bracket.at(x, y), z) != form(l.bracket.at(y, z), x)) return std::array{x, y, z};
      }
  return std::nullopt;
}

/// Exact structural invariants. Equal fingerprints are necessary, not
/// sufficient, for isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  bool solvable = false;
  std::optional<std::size_t> derived_length;
  bool nilpotent = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const LieAlgebra& l) {
  Fingerprint f;
  f.dim = l.dim();
  for (const auto& s : derived_series(l)) f.derived_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(l)) f.lower_central_dims.push_back(s.dim());
  f.center_dim = center(l).dim();
  f.killing_rank = rank(killing_form(l));
  f.solvable = f.derived_dims.back() == 0;
  if (f.solvable) f.derived_length = f.derived_dims.size() - 1;
  f.nilpotent = f.lower_central_dims.back() == 0;
  return f;
}

/// Direct sum of o(d) over `sizes`, each on the skew basis E[r,s] - E[s,r], r < s.
inline LieAlgebra orthogonal_model(const std::vector<std::size_t>& sizes) {
  struct Generator {
    std::size_t block, r, s;
  };
  std::vector<Generator> gens;
  std::vector<std::vector<std::vector<std::size_t>>> index_of(sizes.size());
  LieAlgebra l;
  l.name = "orthogonal model {";
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    l.name += (b ? "," : "") + std::to_string(sizes[b]);
    const std::size_t d = sizes[b];
    index_of[b].assign(d, std::vector<std::size_t>(d, 0));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = r + 1; s < d; ++s) {
        index_of[b][r][s] = gens.size();
        gens.push_back({b, r, s});
        l.labels.push_back("o" + std::to_string(d) + "#" + std::to_string(b + 1) + "[" + std::to_string(r + 1) + "," +
                           std::to_string(s + 1) + "]");
      }
  }
  l.name += "}";
  l.bracket = StructureTable(gens.size());

  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = 0; y < gens.size(); ++y) {
      if (gens[x].block != gens[y].block) continue;
      const std::size_t d = sizes[gens[x].block];
      auto skew = [d](const Generator& g) {
        std::vector<int> m(d * d, 0);
        m[g.r * d + g.s] = 1;
        m[g.s * d + g.r] = -1;
        return m;
      };
      auto a = skew(gens[x]);
      auto b = skew(gens[y]);
      std::vector<int> c(d * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j] - b[i * d + k] * a[k * d + j];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = r + 1; s < d; ++s)
          if (c[r * d + s] != 0) l.bracket.add(x, y, index_of[gens[x].block][r][s], c[r * d + s]);
    }
  return l;
}

struct FingerprintComparison {
  bool match = false;
  Fingerprint actual;
  Fingerprint model;
  std::vector<std::string> differences;
};

namespace detail {

inline std::string dims_str(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "]";
}

inline std::string optional_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace detail

inline FingerprintComparison fingerprint_match(const LieAlgebra& l, const std::vector<std::size_t>& sizes) {
  FingerprintComparison c{false, fingerprint(l), fingerprint(orthogonal_model(sizes)), {}};
  auto diff = [&](const char* field, const std::string& a, const std::string& b) {
    if (a != b) c.differences.push_back(std::string(field) + ": " + a + " vs model " + b);
  };
  const auto& a = c.actual;
  const auto& m = c.model;
  diff("dim", std::to_string(a.dim), std::to_string(m.dim));
  diff("derived_dims", detail::dims_str(a.derived_dims), detail::dims_str(m.derived_dims));
  diff("lower_central_dims", detail::dims_str(a.lower_central_dims), detail::dims_str(m.lower_central_dims));
  diff("center_dim", std::to_string(a.center_dim), std::to_string(m.center_dim));
  diff("killing_rank", std::to_string(a.killing_rank), std::to_string(m.killing_rank));
  diff("solvable", a.solvable ? "true" : "false", m.solvable ? "true" : "false");
  diff("derived_length", detail::optional_str(a.derived_length), detail::optional_str(m.derived_length));
  diff("nilpotent", a.nilpotent ? "true" : "false", m.nilpotent ? "true" : "false");
  c.match = c.differences.empty();
  return c;
}

}  // namespace plesken
