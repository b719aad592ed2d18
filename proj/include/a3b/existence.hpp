#pragma once

// Existence analysis along one-parameter angle families: isolation of the
// roots of the two closure residuals on a linear slice of angle space, and
// the quartic slice whose roots are known in radicals, together with the
// margin by which its roots miss the admissible range for large fans.

#include <array>
#include <vector>

#include "a3b/rational.hpp"

namespace a3b {

// Angles (alpha, beta, gamma, delta) = p_i + q_i * x, in half-turn units,
// over a single real parameter x ranging in the open interval (lo, hi).
// The constructor rejects coefficient sets whose angle sum is not
// identically 2 + 4/f.  When no interval is given it is derived from
// requiring every angle to stay inside (0, 2).
class LinearFamily {
  public:
    LinearFamily(int f, const std::array<std::array<Rational, 2>, 4>& coeffs);
    LinearFamily(int f, const std::array<std::array<Rational, 2>, 4>& coeffs, double lo, double hi);

    int f() const { return f_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::array<std::array<Rational, 2>, 4>& coeffs() const { return coeffs_; }
    std::array<double, 4> angles_at(double x) const;

  private:
    void validate() const;
    void derive_interval();
    int f_;
    std::array<std::array<Rational, 2>, 4> coeffs_;
    double lo_ = 0, hi_ = 0;
};

// A root of one of the two closure residuals along the family; equation 1
// is the difference-form residual, equation 2 the sum form.  double_root
// marks a residual that touches zero without changing sign.
struct AlphaRoot {
    double alpha;
    int equation;
    bool double_root;
};

// Isolates all residual roots inside the open parameter interval by a
// dense scan (10^4 cells) with bisection on sign changes and a guarded
// local-minimum sweep for sign-preserving roots.  Throws degeneracy_error
// when a residual vanishes identically on the family, as happens on the
// slice with alpha = gamma and beta = delta.
std::vector<AlphaRoot> alpha_roots(const LinearFamily& family);

// The family (x, 2 - 2x - 2/k, 2/k, x + 1/k) at f = 4k reduces to the
// quartic A u^4 + B u^2 + C in u = cos(pi x); all four u-roots are known
// in radicals.  roots lists the distinct alpha values in ascending order,
// with coincident u-roots merged (within 1e-12) and flagged as double.
struct QuarticRoot {
    double alpha;
    bool double_root;
};
struct QuarticCase {
    double A, B, C;
    std::array<double, 4> u;
    std::vector<QuarticRoot> roots;
};
QuarticCase quartic_case(int k); // k >= 4

// How far the quartic's roots stay outside the admissible alpha range at
// fan count k: min |u-root| - cos(pi (1/2 - 1/k)), positive when no
// admissible solution exists.  Defined for k >= 6.
double nonexistence_margin(int k);

} // namespace a3b
