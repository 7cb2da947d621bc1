#pragma once

#include <plesken/algebra.hpp>
#include <plesken/builders.hpp>
#include <plesken/diagrams.hpp>
#include <plesken/lie.hpp>
#include <plesken/plesken_lie.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plesken {

/// Cell datum (Lambda, M, C, i) over an algebra whose basis *is* the cellular
/// basis: basis[l][s*d + t] is the algebra basis index of C^l_{s,t}.
/// The involution i is the ambient AntiInvolution passed alongside.
struct CellDatum {
  std::vector<std::string> lambdas;
  /// Strict order relation as pairs (mu, lambda) meaning mu < lambda.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::vector<std::string>> index_sets;
  std::vector<std::vector<std::size_t>> basis;

  std::size_t cells() const { return lambdas.size(); }
  std::size_t size(std::size_t l) const { return index_sets[l].size(); }
  std::size_t basis_index(std::size_t l, std::size_t s, std::size_t t) const { return basis[l][s * size(l) + t]; }

  bool is_less(std::size_t mu, std::size_t lambda) const {
    for (const auto& [a, b] : order)
      if (a == mu && b == lambda) return true;
    return false;
  }

  /// Sum of |M(l)|^2, which equals dim A for a valid datum.
  std::size_t total() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < cells(); ++l) n += size(l) * size(l);
    return n;
  }

  friend bool operator==(const CellDatum&, const CellDatum&) = default;
};

namespace detail {

/// Totally ordered Lambda = labels[0] < labels[1] < ...
inline std::vector<std::pair<std::size_t, std::size_t>> chain_order(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) order.emplace_back(a, b);
  return order;
}

}  // namespace detail

/// Lambda = {0..n} by arc count; M(l) = l-subsets of {1..n};
/// C^l_{s,t} = diagram with top endpoints s and bottom endpoints t.
inline CellDatum cell_datum_planar_rook(int n) {
  const auto diagrams = enumerate_planar_rook(n);
  std::map<PlanarRookDiagram, std::size_t> index;
  for (std::size_t k = 0; k < diagrams.size(); ++k) index.emplace(diagrams[k], k);

  CellDatum cd;
  for (int l = 0; l <= n; ++l) {
    auto sets = detail::subsets(n, l);
    cd.lambdas.push_back(std::to_string(l));
    std::vector<std::string> labels;
    for (const auto& s : sets) labels.push_back(detail::join_set(s));
    cd.index_sets.push_back(std::move(labels));
    std::vector<std::size_t> cells;
    for (const auto& s : sets)
      for (const auto& t : sets) cells.push_back(index.at(PlanarRookDiagram{s, t}));
    cd.basis.push_back(std::move(cells));
  }
  cd.order = detail::chain_order(cd.lambdas.size());
  return cd;
}

/// Lambda = through-strand counts {n mod 2, ..., n-2, n}; M(l) = half diagrams
/// with l defects; C^l_{s,t} glues top half s to bottom half t.
inline CellDatum cell_datum_temperley_lieb(int n) {
  const auto diagrams = enumerate_temperley_lieb(n);
  std::map<TLDiagram, std::size_t> index;
  for (std::size_t k = 0; k < diagrams.size(); ++k) index.emplace(diagrams[k], k);

  CellDatum cd;
  for (int l = n % 2; l <= n; l += 2) {
    auto halves = enumerate_half_diagrams(n, l);
    cd.lambdas.push_back(std::to_string(l));
    std::vector<std::string> labels;
    for (const auto& h : halves) labels.push_back(h.shape);
    cd.index_sets.push_back(std::move(labels));
    std::vector<std::size_t> cells;
    for (const auto& s : halves)
      for (const auto& t : halves) cells.push_back(index.at(glue(s, t)));
    cd.basis.push_back(std::move(cells));
  }
  cd.order = detail::chain_order(cd.lambdas.size());
  return cd;
}

/// Single cell Lambda = {1}, M(1) = {1..n}, C(s,t) = E[s,t].
inline CellDatum cell_datum_matrix(int n) {
  CellDatum cd;
  cd.lambdas = {"1"};
  std::vector<std::string> labels;
  std::vector<std::size_t> cells;
  for (int s = 1; s <= n; ++s) labels.push_back(std::to_string(s));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n * n); ++k) cells.push_back(k);
  cd.index_sets.push_back(std::move(labels));
  cd.basis.push_back(std::move(cells));
  return cd;
}

struct CellPosition {
  std::size_t lambda, s, t;
};

struct CellValidation {
  bool ok = true;
  std::string clause;
  std::string witness;
};

namespace detail {

/// Inverse of the basis map; throws nothing, returns nullopt on a C1 defect.
inline std::optional<std::vector<CellPosition>> cell_positions(const CellDatum& cd, std::size_t dim,
                                                               std::string& why) {
  std::vector<CellPosition> pos(dim, CellPosition{SIZE_MAX, 0, 0});
  if (cd.index_sets.size() != cd.lambdas.size() || cd.basis.size() != cd.lambdas.size()) {
    why = "lambda, index-set and basis lists differ in length";
    return std::nullopt;
  }
  for (std::size_t l = 0; l < cd.cells(); ++l) {
    const std::size_t d = cd.size(l);
    if (cd.basis[l].size() != d * d) {
      why = "cell " + cd.lambdas[l] + " has " + std::to_string(cd.basis[l].size()) + " basis entries, expected " +
            std::to_string(d * d);
      return std::nullopt;
    }
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        std::size_t k = cd.basis_index(l, s, t);
        if (k >= dim) {
          why = "basis index " + std::to_string(k) + " out of range";
          return std::nullopt;
        }
        if (pos[k].lambda != SIZE_MAX) {
          why = "basis index " + std::to_string(k) + " used twice";
          return std::nullopt;
        }
        pos[k] = {l, s, t};
      }
  }
  for (std::size_t k = 0; k < dim; ++k)
    if (pos[k].lambda == SIZE_MAX) {
      why = "basis index " + std::to_string(k) + " not covered";
      return std::nullopt;
    }
  return pos;
}

inline std::string cell_name(const CellDatum& cd, std::size_t l, std::size_t s, std::size_t t) {
  return "C^" + cd.lambdas[l] + "_{" + cd.index_sets[l][s] + "," + cd.index_sets[l][t] + "}";
}

/// Coefficients r(s', s) of e_a * C^l_{s,t} on the cell row (., t), or a
/// failure message when the product has components outside row t of cell l
/// that are not in A(<l).
inline std::optional<std::string> cell_row(const Algebra& a, const CellDatum& cd,
                                           const std::vector<CellPosition>& pos, std::size_t elem, std::size_t l,
                                           std::size_t s, std::size_t t, Vector& row) {
  row.assign(cd.size(l), Scalar());
  for (const auto& term : a.product(elem, cd.basis_index(l, s, t))) {
    const auto& p = pos[term.index];
    if (p.lambda == l && p.t == t) {
      row[p.s] = term.coeff;
    } else if (!cd.is_less(p.lambda, l)) {
      return a.labels()[elem] + " * " + cell_name(cd, l, s, t) + " has a component on " +
             cell_name(cd, p.lambda, p.s, p.t) + " outside A(<" + cd.lambdas[l] + ")";
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks (C1) bijectivity and that the order is a strict partial order,
/// (C2) i(C_{s,t}) = C_{t,s}, and (C3) triangularity with t-independent
/// coefficients, solved on the first t and re-checked on every other t.
inline CellValidation validate_cell_datum(const Algebra& a, const AntiInvolution& sigma, const CellDatum& cd) {
  std::string why;
  auto pos = detail::cell_positions(cd, a.dim(), why);
  if (!pos) return {false, "C1", why};
  for (const auto& [mu, l] : cd.order) {
    if (mu >= cd.cells() || l >= cd.cells()) return {false, "C1", "order relation refers to unknown lambda"};
    if (mu == l) return {false, "C1", "order relation is not irreflexive at " + cd.lambdas[l]};
    for (const auto& [x, y] : cd.order)
      if (x == l && !cd.is_less(mu, y))
        return {false, "C1",
                "order relation is not transitive: " + cd.lambdas[mu] + " < " + cd.lambdas[l] + " < " + cd.lambdas[y]};
  }

  for (std::size_t l = 0; l < cd.cells(); ++l)
    for (std::size_t s = 0; s < cd.size(l); ++s)
      for (std::size_t t = 0; t < cd.size(l); ++t) {
        Vector image = sigma.apply(a.basis_vector(cd.basis_index(l, s, t)));
        if (image != a.basis_vector(cd.basis_index(l, t, s)))
          return {false, "C2", "i(" + detail::cell_name(cd, l, s, t) + ") != " + detail::cell_name(cd, l, t, s)};
      }

  Vector row, other;
  for (std::size_t elem = 0; elem < a.dim(); ++elem)
    for (std::size_t l = 0; l < cd.cells(); ++l) {
      const std::size_t d = cd.size(l);
      for (std::size_t s = 0; s < d; ++s) {
        if (auto bad = detail::cell_row(a, cd, *pos, elem, l, s, 0, row)) return {false, "C3", *bad};
        for (std::size_t t = 1; t < d; ++t) {
          if (auto bad = detail::cell_row(a, cd, *pos, elem, l, s, t, other)) return {false, "C3", *bad};
          if (other != row)
            return {false, "C3",
                    "coefficients of " + a.labels()[elem] + " * " + detail::cell_name(cd, l, s, t) +
                        " differ from those for t = " + cd.index_sets[l][0]};
        }
      }
    }
  return {};
}

/// Cell module W(l): action[e] is the matrix of r_{e}(s', s) (row s', column s).
struct CellModule {
  std::size_t lambda = 0;
  std::vector<std::string> basis;
  std::vector<Matrix> action;

  std::size_t dim() const { return basis.size(); }

  Matrix rho(std::span<const Scalar> x) const {
    Matrix m(dim(), dim());
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) m += x[k] * action[k];
    return m;
  }
};

inline CellModule cell_module(const Algebra& a, const CellDatum& cd, std::size_t l) {
  std::string why;
  auto pos = detail::cell_positions(cd, a.dim(), why);
  if (!pos) throw std::invalid_argument("cell_module: invalid cell datum: " + why);
  const std::size_t d = cd.size(l);
  CellModule m{l, cd.index_sets[l], {}};
  Vector row;
  for (std::size_t elem = 0; elem < a.dim(); ++elem) {
    Matrix rho(d, d);
    for (std::size_t s = 0; s < d; ++s) {
      if (auto bad = detail::cell_row(a, cd, *pos, elem, l, s, 0, row)) throw consistency_error(*bad);
      for (std::size_t sp = 0; sp < d; ++sp) rho(sp, s) = row[sp];
    }
    m.action.push_back(std::move(rho));
  }
  return m;
}

/// rho(1) = id and rho(e_a e_b) = rho(e_a) rho(e_b) on all basis pairs.
inline std::optional<std::string> check_module_axioms(const Algebra& a, const CellModule& m) {
  if (!m.rho(a.unit()).is_identity()) return "rho(1) is not the identity";
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      Matrix prod(m.dim(), m.dim());
      for (const auto& t : a.product(x, y)) prod += t.coeff * m.action[t.index];
      if (prod != m.action[x] * m.action[y])
        return "rho(" + a.labels()[x] + " " + a.labels()[y] + ") != rho(" + a.labels()[x] + ") rho(" + a.labels()[y] +
               ")";
    }
  return std::nullopt;
}

struct GramForm {
  std::size_t lambda = 0;
  Matrix gram;
};

/// phi_l(t,u) read as the coefficient of C_{s,v} in C_{s,t} C_{u,v} mod A(<l)
/// with witnesses s = v = first index, re-verified on s = v = last index.
inline GramForm gram_matrix(const Algebra& a, const CellDatum& cd, std::size_t l) {
  std::string why;
  auto pos = detail::cell_positions(cd, a.dim(), why);
  if (!pos) throw std::invalid_argument("gram_matrix: invalid cell datum: " + why);
  const std::size_t d = cd.size(l);

  auto read = [&](std::size_t s, std::size_t v) {
    Matrix g(d, d);
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t u = 0; u < d; ++u)
        for (const auto& term : a.product(cd.basis_index(l, s, t), cd.basis_index(l, u, v))) {
          const auto& p = (*pos)[term.index];
          if (p.lambda == l && p.s == s && p.t == v)
            g(t, u) = term.coeff;
          else if (!cd.is_less(p.lambda, l))
            throw consistency_error("gram_matrix: " + detail::cell_name(cd, l, s, t) + " * " +
                                    detail::cell_name(cd, l, u, v) + " is not a multiple of " +
                                    detail::cell_name(cd, l, s, v) + " modulo A(<" + cd.lambdas[l] + ")");
        }
    return g;
  };
  GramForm f{l, d == 0 ? Matrix() : read(0, 0)};
  if (d > 1 && read(d - 1, d - 1) != f.gram)
    throw consistency_error("gram_matrix: form for cell " + cd.lambdas[l] + " depends on the witness pair");
  return f;
}

struct SemisimplicityVerdict {
  struct Cell {
    std::size_t lambda;
    std::size_t size;
    std::size_t rank;
  };
  bool semisimple = true;
  std::vector<Cell> cells;
  std::vector<Matrix> grams;
};

/// Semisimple iff every Gram matrix has full rank.
inline SemisimplicityVerdict is_semisimple(const Algebra& a, const CellDatum& cd) {
  SemisimplicityVerdict v;
  for (std::size_t l = 0; l < cd.cells(); ++l) {
    GramForm g = gram_matrix(a, cd, l);
    std::size_t r = rank(g.gram);
    v.cells.push_back({l, cd.size(l), r});
    if (r != cd.size(l)) v.semisimple = false;
    v.grams.push_back(std::move(g.gram));
  }
  return v;
}

struct Decomposition {
  /// (lambda, d_lambda) for every lambda with nonempty M(lambda).
  std::vector<std::pair<std::size_t, std::size_t>> summands;
  std::size_t plesken_dim = 0;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& s : summands) out.push_back(s.second);
    return out;
  }
};

/// Predicted orthogonal summand sizes; refuses (std::domain_error) when the
/// semisimplicity hypothesis is not met.
inline Decomposition predicted_decomposition(const CellDatum& cd, const SemisimplicityVerdict& verdict) {
  if (!verdict.semisimple) throw std::domain_error("predicted_decomposition: algebra is not semisimple");
  Decomposition d;
  for (std::size_t l = 0; l < cd.cells(); ++l) {
    const std::size_t n = cd.size(l);
    if (n == 0) continue;
    d.summands.emplace_back(l, n);
    d.plesken_dim += n * (n - 1) / 2;
  }
  return d;
}

/// Proposition-style identities: G symmetric and rho(i(e_a))^T G = G rho(e_a).
inline std::optional<std::string> check_gram_properties(const Algebra& a, const AntiInvolution& sigma,
                                                        const CellDatum& cd, std::size_t l) {
  CellModule m = cell_module(a, cd, l);
  GramForm g = gram_matrix(a, cd, l);
  if (!g.gram.is_symmetric()) return "Gram matrix of cell " + cd.lambdas[l] + " is not symmetric";
  for (std::size_t e = 0; e < a.dim(); ++e) {
    Matrix lhs = m.rho(sigma.matrix.column(e)).transpose() * g.gram;
    Matrix rhs = g.gram * m.action[e];
    if (lhs != rhs) return "adjointness fails for " + a.labels()[e] + " on cell " + cd.lambdas[l];
  }
  return std::nullopt;
}

struct TheoremCheck {
  bool certified = false;
  /// (a) the combined representation of A on all cell modules is injective.
  bool representation_injective = false;
  std::size_t representation_rank = 0;
  /// (b) rho_l(x)^T G_l + G_l rho_l(x) = 0 for every Plesken basis x and cell l.
  bool form_skew = false;
  /// (c) dim L(A) equals the sum of d(d-1)/2.
  bool dimension_match = false;
  std::size_t plesken_dim = 0;
  std::size_t predicted_dim = 0;
  std::vector<std::size_t> sizes;
  std::string failed_check;
  std::string witness;
};

/// Certifies that rho = (+)rho_l maps L(A) isomorphically onto (+)o(phi_l),
/// the Lie algebras of matrices skew for each Gram form.
inline TheoremCheck verify_theorem(const Algebra& a, const AntiInvolution& sigma, const CellDatum& cd) {
  TheoremCheck c;
  std::vector<CellModule> modules;
  std::vector<Matrix> grams;
  std::size_t rows = 0;
  for (std::size_t l = 0; l < cd.cells(); ++l) {
    modules.push_back(cell_module(a, cd, l));
    grams.push_back(gram_matrix(a, cd, l).gram);
    rows += cd.size(l) * cd.size(l);
    if (cd.size(l) > 0) {
      c.sizes.push_back(cd.size(l));
      c.predicted_dim += cd.size(l) * (cd.size(l) - 1) / 2;
    }
  }

  Matrix combined(rows, a.dim());
  for (std::size_t e = 0; e < a.dim(); ++e) {
    std::size_t r = 0;
    for (const auto& m : modules)
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) combined(r++, e) = m.action[e](i, j);
  }
  c.representation_rank = rank(combined);
  c.representation_injective = c.representation_rank == a.dim();

  Subspace l_a = plesken_subspace(a, sigma);
  c.plesken_dim = l_a.dim();
  c.form_skew = true;
  for (std::size_t x = 0; x < l_a.dim() && c.form_skew; ++x)
    for (std::size_t l = 0; l < cd.cells() && c.form_skew; ++l) {
      Matrix rho = modules[l].rho(l_a.basis()[x]);
      if (!(rho.transpose() * grams[l] + grams[l] * rho).is_zero()) {
        c.form_skew = false;
        c.witness = "Plesken basis element " + std::to_string(x) + " is not skew for the form of cell " + cd.lambdas[l];
      }
    }
  c.dimension_match = c.plesken_dim == c.predicted_dim;

  if (!c.representation_injective) {
    c.failed_check = "a";
    c.witness = "combined cell representation has rank " + std::to_string(c.representation_rank) + " < dim A = " +
                std::to_string(a.dim());
  } else if (!c.form_skew) {
    c.failed_check = "b";
  } else if (!c.dimension_match) {
    c.failed_check = "c";
    c.witness = "dim L(A) = " + std::to_string(c.plesken_dim) + " but sum d(d-1)/2 = " + std::to_string(c.predicted_dim);
  }
  c.certified = c.failed_check.empty();
  return c;
}

struct TransportCheck {
  /// rho([x,y]) = [rho(x), rho(y)] on all Plesken basis pairs.
  bool homomorphism = false;
  /// All Gram matrices are the identity, so the image is literally block-skew.
  bool identity_grams = false;
  /// With identity Grams: rho is a bijection onto orthogonal_model(sizes) and
  /// carries the structure constants of L(A) onto the model's exactly.
  bool model_match = false;
};

inline TransportCheck transport_to_model(const Algebra& a, const AntiInvolution& sigma, const CellDatum& cd) {
  TransportCheck out;
  std::vector<CellModule> modules;
  std::vector<std::size_t> sizes;
  out.identity_grams = true;
  for (std::size_t l = 0; l < cd.cells(); ++l) {
    if (cd.size(l) == 0) continue;
    modules.push_back(cell_module(a, cd, l));
    sizes.push_back(cd.size(l));
    if (!gram_matrix(a, cd, l).gram.is_identity()) out.identity_grams = false;
  }
  Subspace basis = plesken_subspace(a, sigma);
  LieAlgebra lie = plesken_lie_algebra(a, basis);
  const std::size_t m = basis.dim();

  std::vector<std::vector<Matrix>> images(m);
  for (std::size_t x = 0; x < m; ++x)
    for (const auto& mod : modules) images[x].push_back(mod.rho(basis.basis()[x]));

  out.homomorphism = true;
  for (std::size_t x = 0; x < m && out.homomorphism; ++x)
    for (std::size_t y = 0; y < m && out.homomorphism; ++y) {
      Vector br = to_dense(lie.bracket.at(x, y), m);
      for (std::size_t b = 0; b < modules.size(); ++b) {
        Matrix lhs(sizes[b], sizes[b]);
        for (std::size_t k = 0; k < m; ++k)
          if (!br[k].is_zero()) lhs += br[k] * images[k][b];
        if (lhs != commutator(images[x][b], images[y][b])) {
          out.homomorphism = false;
          break;
        }
      }
    }
  if (!out.identity_grams || !out.homomorphism) return out;

  LieAlgebra model = orthogonal_model(sizes);
  if (model.dim() != m) return out;
  // Column x: coordinates of rho(x) on the model basis (upper-triangular entries).
  Matrix transport(m, m);
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t row = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b)
      for (std::size_t r = 0; r < sizes[b]; ++r)
        for (std::size_t s = r + 1; s < sizes[b]; ++s) transport(row++, x) = images[x][b](r, s);
  }
  if (rank(transport) != m) return out;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Vector lhs = transport * to_dense(lie.bracket.at(x, y), m);
      Vector rhs = bracket(model, transport.column(x), transport.column(y));
      if (lhs != rhs) return out;
    }
  out.model_match = true;
  return out;
}

}  // namespace plesken
