#pragma once

#include <plesken/algebra.hpp>
#include <plesken/lie.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace plesken {

/// The Plesken subspace L(A) = span{a - sigma(a)} held in canonical echelon form.
///
/// For a linear sigma this is the (-1)-eigenspace, computed as the kernel of
/// sigma + id and cross-checked against span{e_i - sigma(e_i)}; for a
/// semilinear sigma the span is taken over a - sigma(a) for a in {e_i, i*e_i}.
inline Subspace plesken_subspace(const Algebra& a, const AntiInvolution& sigma) {
  const std::size_t n = a.dim();
  std::vector<Vector> hats;
  for (std::size_t k = 0; k < n; ++k) {
    Vector e = a.basis_vector(k);
    hats.push_back(e - sigma.apply(e));
    if (sigma.semilinear) {
      Vector ie = Scalar::imaginary_unit() * e;
      hats.push_back(ie - sigma.apply(ie));
    }
  }
  Subspace span = Subspace::span(hats, n);
  if (sigma.semilinear) return span;

  Subspace eigen = Subspace::span(kernel_basis(sigma.matrix + Matrix::identity(n)), n);
  if (eigen != span)
    throw consistency_error("(-1)-eigenspace of sigma differs from span{e_i - sigma(e_i)} on " + a.name());
  return eigen;
}

inline std::vector<Vector> plesken_basis(const Algebra& a, const AntiInvolution& sigma) {
  return plesken_subspace(a, sigma).basis();
}

/// The Lie algebra on plesken_basis with [x,y] = xy - yx expressed in that basis.
inline LieAlgebra plesken_lie_algebra(const Algebra& a, const Subspace& basis) {
  const std::size_t m = basis.dim();
  LieAlgebra l;
  l.name = "plesken(" + a.name() + ")";
  for (const auto& b : basis.basis()) l.labels.push_back(format_element(a.labels(), b));
  l.bracket = StructureTable(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      Vector c = commutator(a, basis.basis()[x], basis.basis()[y]);
      auto coords = basis.coordinates(c);
      if (!coords) throw consistency_error("bracket of Plesken basis elements left L(A) on " + a.name());
      for (std::size_t k = 0; k < m; ++k) {
        if ((*coords)[k].is_zero()) continue;
        l.bracket.add(x, y, k, (*coords)[k]);
        l.bracket.add(y, x, k, -(*coords)[k]);
      }
    }
  return l;
}

inline LieAlgebra plesken_lie_algebra(const Algebra& a, const AntiInvolution& sigma) {
  return plesken_lie_algebra(a, plesken_subspace(a, sigma));
}

/// Deterministic integer source for sampled checks: values uniform in [lo, hi].
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : engine_(seed) {}
  long next(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

inline Vector random_element(SampleSource& rng, std::size_t dim, bool gaussian) {
  Vector v(dim);
  for (auto& x : v) {
    long re = rng.next(-9, 9);
    long im = gaussian ? rng.next(-9, 9) : 0;
    x = Scalar(mpq_class(re), mpq_class(im));
  }
  return v;
}

struct ClosureCounterexample {
  std::size_t sample = 0;
  std::string reason;
  Vector a;
  Vector b;
};

/// For `samples` random pairs (a,b) checks
///   [a^, b^] = (ab)^ - (a sigma(b))^ - (sigma(a) b)^ + (sigma(a) sigma(b))^
/// exactly and that [a^, b^] lies in L(A). Coefficients are integers in
/// [-9, 9]; imaginary parts are drawn too when sigma is semilinear.
inline std::optional<ClosureCounterexample> bracket_closure_check(const Algebra& a, const AntiInvolution& sigma,
                                                                  std::size_t samples, std::uint64_t seed) {
  Subspace l = plesken_subspace(a, sigma);
  SampleSource rng(seed);
  auto hat = [&](const Vector& x) { return x - sigma.apply(x); };
  for (std::size_t k = 0; k < samples; ++k) {
    Vector x = random_element(rng, a.dim(), sigma.semilinear);
    Vector y = random_element(rng, a.dim(), sigma.semilinear);
    Vector sx = sigma.apply(x);
    Vector sy = sigma.apply(y);
    Vector lhs = commutator(a, hat(x), hat(y));
    Vector rhs = hat(multiply(a, x, y)) - hat(multiply(a, x, sy)) - hat(multiply(a, sx, y)) + hat(multiply(a, sx, sy));
    if (lhs != rhs) return ClosureCounterexample{k, "four-term identity fails", x, y};
    if (!l.contains(lhs)) return ClosureCounterexample{k, "bracket leaves L(A)", x, y};
  }
  return std::nullopt;
}

}  // namespace plesken
