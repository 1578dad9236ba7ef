#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

// Real Clifford algebra Cl(E^{n-1}) on generators e_2..e_n with e_j^2 = -1,
// stored as a dense table of blade coefficients.  The scalar type is a
// template parameter so the same arithmetic runs over double, complex, or
// truncated-Taylor jets.

namespace vahlen {

template <typename Scalar = double>
class Multivector {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Multivector() : n_(0) {}
  explicit Multivector(int n) : n_(check_dim(n)), c_(Coeffs::Zero(1 << (n - 1))) {}
  Multivector(int n, Coeffs c) : n_(check_dim(n)), c_(std::move(c)) {
    if (c_.size() != (1 << (n_ - 1))) throw std::invalid_argument("Multivector: coefficient count");
  }

  int dim() const { return n_; }                 // ambient dimension of E^n
  int blades() const { return int(c_.size()); }  // 2^{n-1}
  const Coeffs& coeffs() const { return c_; }
  Scalar& operator[](int blade) { return c_[blade]; }
  const Scalar& operator[](int blade) const { return c_[blade]; }

  static Multivector scalar(int n, Scalar s) {
    Multivector a(n);
    a.c_[0] = s;
    return a;
  }
  static Multivector basis_blade(int n, unsigned mask, Scalar s = Scalar(1)) {
    Multivector a(n);
    if (mask >= unsigned(1 << (n - 1))) throw std::invalid_argument("blade mask out of range");
    a.c_[mask] = s;
    return a;
  }

 private:
  static int check_dim(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("Multivector: dimension must be in [1,8]");
    return n;
  }
  int n_;
  Coeffs c_;
};

// bit k of a blade mask stands for the generator e_{k+2}
inline int blade_grade(unsigned mask) { return std::popcount(mask); }

// sign of e_A e_B: transpositions to interleave the factors, then one
// factor -1 per repeated generator (e_j^2 = -1)
inline int blade_mul_sign(unsigned a, unsigned b) {
  int swaps = std::popcount(a & b);
  unsigned t = a >> 1;
  while (t) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

inline int principal_sign(unsigned mask) { return (blade_grade(mask) & 1) ? -1 : 1; }
inline int reversion_sign(unsigned mask) {
  int g = blade_grade(mask);
  return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}
inline int conjugation_sign(unsigned mask) {
  int g = blade_grade(mask);
  return ((g * (g + 1) / 2) & 1) ? -1 : 1;
}

namespace detail {
template <typename Scalar>
bool is_exact_zero(const Scalar& s) {
  return s == Scalar(0);
}
}  // namespace detail

template <typename Scalar>
Multivector<Scalar> operator+(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Multivector: dimension mismatch");
  return Multivector<Scalar>(a.dim(), a.coeffs() + b.coeffs());
}

template <typename Scalar>
Multivector<Scalar> operator-(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Multivector: dimension mismatch");
  return Multivector<Scalar>(a.dim(), a.coeffs() - b.coeffs());
}

template <typename Scalar>
Multivector<Scalar> operator-(const Multivector<Scalar>& a) {
  return Multivector<Scalar>(a.dim(), -a.coeffs());
}

template <typename Scalar, typename S2>
Multivector<Scalar> operator*(const S2& s, const Multivector<Scalar>& a) {
  typename Multivector<Scalar>::Coeffs c = a.coeffs();
  for (int i = 0; i < c.size(); ++i) c[i] = Scalar(s) * c[i];
  return Multivector<Scalar>(a.dim(), std::move(c));
}

template <typename Scalar, typename S2>
Multivector<Scalar> operator*(const Multivector<Scalar>& a, const S2& s) {
  return s * a;
}

// geometric product
template <typename Scalar>
Multivector<Scalar> operator*(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("geom_product: dimension mismatch");
  const int m = a.blades();
  Multivector<Scalar> out(a.dim());
  for (int i = 0; i < m; ++i) {
    if (detail::is_exact_zero(a[i])) continue;
    for (int j = 0; j < m; ++j) {
      if (detail::is_exact_zero(b[j])) continue;
      const int sgn = blade_mul_sign(unsigned(i), unsigned(j));
      const unsigned k = unsigned(i) ^ unsigned(j);
      if (sgn > 0)
        out[k] += a[i] * b[j];
      else
        out[k] -= a[i] * b[j];
    }
  }
  return out;
}

template <typename Scalar>
Multivector<Scalar> geom_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return a * b;
}

enum class Involution { Principal, Reversion, Conjugation };

template <typename Scalar>
Multivector<Scalar> involution(const Multivector<Scalar>& a, Involution kind) {
  Multivector<Scalar> out = a;
  for (int i = 0; i < a.blades(); ++i) {
    int s = kind == Involution::Principal    ? principal_sign(unsigned(i))
            : kind == Involution::Reversion ? reversion_sign(unsigned(i))
                                            : conjugation_sign(unsigned(i));
    if (s < 0) out[i] = -out[i];
  }
  return out;
}

template <typename Scalar>
Multivector<Scalar> principal(const Multivector<Scalar>& a) {
  return involution(a, Involution::Principal);
}
template <typename Scalar>
Multivector<Scalar> reversion(const Multivector<Scalar>& a) {
  return involution(a, Involution::Reversion);
}
template <typename Scalar>
Multivector<Scalar> clifford_conj(const Multivector<Scalar>& a) {
  return involution(a, Involution::Conjugation);
}

template <typename Scalar>
Scalar scalar_part(const Multivector<Scalar>& a) {
  return a[0];
}

// ---------------------------------------------------------------------------
// paravector model of E^n:  x = x_1 * 1 + x_2 e_2 + ... + x_n e_n
// ---------------------------------------------------------------------------

template <typename Scalar>
Multivector<Scalar> embed(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  const int n = int(x.size());
  Multivector<Scalar> a(n);
  a[0] = x[0];
  for (int j = 1; j < n; ++j) a[1 << (j - 1)] = x[j];
  return a;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> vector_part(const Multivector<Scalar>& a) {
  const int n = a.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(n);
  x[0] = a[0];
  for (int j = 1; j < n; ++j) x[j] = a[1 << (j - 1)];
  return x;
}

inline bool is_paravector_blade(unsigned mask) { return mask == 0 || std::popcount(mask) == 1; }

// norm of everything outside the paravector slots (floating scalars only)
template <typename Scalar>
double vector_defect(const Multivector<Scalar>& a) {
  double d2 = 0;
  for (int i = 0; i < a.blades(); ++i)
    if (!is_paravector_blade(unsigned(i))) d2 += std::norm(std::complex<double>(a[i]));
  return std::sqrt(d2);
}

// canonical norm: blades are orthonormal, so |a|^2 = sum of squared coefficients,
// which coincides with the scalar part of a*conj(a)
template <typename Scalar>
double norm(const Multivector<Scalar>& a) {
  return a.coeffs().norm();
}

// scalar part of a*conj(a); for a in the Clifford group this is |a|^2 exactly,
// and the formula stays valid over any coefficient ring (jets included)
template <typename Scalar>
Scalar group_norm_sq(const Multivector<Scalar>& a) {
  Scalar s(0);
  for (int i = 0; i < a.blades(); ++i) {
    // conjugation contributes the same sign as the blade square, so terms add
    s += a[i] * a[i];
  }
  return s;
}

// inverse of a Clifford-group element: conj(a)/|a|^2
template <typename Scalar>
Multivector<Scalar> gamma_inverse(const Multivector<Scalar>& a) {
  Scalar n2 = group_norm_sq(a);
  if (detail::is_exact_zero(n2)) throw std::domain_error("gamma_inverse: zero element");
  Multivector<Scalar> out = clifford_conj(a);
  for (int i = 0; i < out.blades(); ++i) out[i] = out[i] / n2;
  return out;
}

template <typename Scalar>
std::pair<double, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> norm_and_inverse(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  const double nx = x.norm();
  if (nx == 0.0) throw std::domain_error("paravector inverse: zero vector");
  Multivector<Scalar> inv = gamma_inverse(embed(x));
  return {nx, vector_part(inv)};
}

// x |-> a x (a')^{-1}, projected back to E^n; second member is the projection
// defect (should vanish for a in the Clifford group)
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>, double> sandwich(
    const Multivector<Scalar>& a, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  Multivector<Scalar> y = a * embed(x) * gamma_inverse(principal(a));
  return {vector_part(y), vector_defect(y)};
}

// operational membership test for the Clifford group Gamma_n: a*conj(a) and
// conj(a)*a are positive scalars and conjugation by a preserves E^n
inline bool in_clifford_group(const Multivector<double>& a, double tol = 1e-10) {
  const double na = norm(a);
  if (!(na > 0) || !std::isfinite(na)) return false;
  const double scale = na * na;
  Multivector<double> ac = a * clifford_conj(a);
  Multivector<double> ca = clifford_conj(a) * a;
  if (!(ac[0] > tol * scale)) return false;
  Multivector<double> ac_off = ac, ca_off = ca;
  ac_off[0] = 0;
  ca_off[0] = 0;
  if (norm(ac_off) > tol * scale || norm(ca_off) > tol * scale) return false;
  const int n = a.dim();
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    auto [y, defect] = sandwich(a, e);
    (void)y;
    if (defect > tol * (1.0 + scale)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// samplers and one-parameter rotor families
// ---------------------------------------------------------------------------

inline Eigen::VectorXd random_paravector(int n, std::mt19937_64& rng, double min_norm = 0.2) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x[j] = gauss(rng);
    if (x.norm() >= min_norm) return x;
  }
}

inline Multivector<double> random_multivector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Multivector<double> a(n);
  for (int i = 0; i < a.blades(); ++i) a[i] = gauss(rng);
  return a;
}

// product of `factors` random nonzero paravectors: a Clifford-group element by
// construction (empty product = 1)
inline Multivector<double> random_gamma(int n, std::mt19937_64& rng, int factors) {
  if (factors < 0) throw std::invalid_argument("random_gamma: negative factor count");
  Multivector<double> a = Multivector<double>::scalar(n, 1.0);
  for (int k = 0; k < factors; ++k) a = a * embed<double>(random_paravector(n, rng));
  return a;
}

inline Multivector<double> random_unit_gamma(int n, std::mt19937_64& rng, int factors) {
  Multivector<double> a = random_gamma(n, rng, factors);
  return a * (1.0 / norm(a));
}

// exp(t/2 e_j): rotates the (1, e_j) coordinate plane by t
inline Multivector<double> rotor_scalar_plane(int n, int j, double t) {
  if (j < 2 || j > n) throw std::invalid_argument("rotor_scalar_plane: generator index");
  Multivector<double> m(n);
  m[0] = std::cos(t / 2);
  m[1u << (j - 2)] = std::sin(t / 2);
  return m;
}

// exp(t/2 e_j e_k): rotates the (e_j, e_k) coordinate plane by t
inline Multivector<double> rotor_bivector_plane(int n, int j, int k, double t) {
  if (j < 2 || k <= j || k > n) throw std::invalid_argument("rotor_bivector_plane: indices");
  Multivector<double> m(n);
  m[0] = std::cos(t / 2);
  m[(1u << (j - 2)) | (1u << (k - 2))] = std::sin(t / 2);
  return m;
}

template <typename To, typename From>
Multivector<To> cast_multivector(const Multivector<From>& a) {
  Multivector<To> out(a.dim());
  for (int i = 0; i < a.blades(); ++i) out[i] = To(a[i]);
  return out;
}

}  // namespace vahlen
