// Existence analysis implementation: interval derivation for linear angle
// families, the residual root scan, and the radical solution of the
// quartic slice.

#include "a3b/existence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "a3b/errors.hpp"
#include "a3b/trig.hpp"

namespace a3b {

LinearFamily::LinearFamily(int f, const std::array<std::array<Rational, 2>, 4>& coeffs)
    : f_(f), coeffs_(coeffs) {
    validate();
    derive_interval();
}

LinearFamily::LinearFamily(int f, const std::array<std::array<Rational, 2>, 4>& coeffs, double lo,
                           double hi)
    : f_(f), coeffs_(coeffs), lo_(lo), hi_(hi) {
    validate();
    if (!(lo_ < hi_)) throw domain_error("LinearFamily: empty parameter interval");
}

void LinearFamily::validate() const {
    if (f_ < 6 || f_ % 2 != 0)
        throw domain_error("LinearFamily: f must be an even integer >= 6");
    Rational sum_p(0), sum_q(0);
    for (const auto& c : coeffs_) {
        sum_p = sum_p + c[0];
        sum_q = sum_q + c[1];
    }
    if (sum_p != Rational(2) + Rational(4, f_))
        throw domain_error("LinearFamily: constant terms must sum to 2 + 4/f");
    if (sum_q != Rational(0))
        throw domain_error("LinearFamily: parameter coefficients must sum to 0");
}

void LinearFamily::derive_interval() {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& c : coeffs_) {
        double p = c[0].value(), q = c[1].value();
        if (q > 0) {
            lo = std::max(lo, -p / q);
            hi = std::min(hi, (2 - p) / q);
        } else if (q < 0) {
            lo = std::max(lo, (2 - p) / q);
            hi = std::min(hi, -p / q);
        } else if (p <= 0 || p >= 2) {
            throw domain_error("LinearFamily: a constant angle lies outside (0, 2)");
        }
    }
    if (!(lo < hi)) throw domain_error("LinearFamily: empty parameter interval");
    lo_ = lo;
    hi_ = hi;
}

std::array<double, 4> LinearFamily::angles_at(double x) const {
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = coeffs_[i][0].value() + coeffs_[i][1].value() * x;
    return out;
}

namespace {

double residual_at(const LinearFamily& fam, int equation, double x) {
    auto th = fam.angles_at(x);
    auto r = closure_residuals(th[0], th[1], th[2], th[3]);
    return equation == 1 ? r.first : r.second;
}

double bisect_root(const LinearFamily& fam, int equation, double lo, double hi) {
    double flo = residual_at(fam, equation, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = residual_at(fam, equation, mid);
        if (fmid == 0) return mid;
        if ((flo < 0) != (fmid < 0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization of |residual| on [lo, hi].
double golden_min(const LinearFamily& fam, int equation, double lo, double hi, double* fmin) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = std::fabs(residual_at(fam, equation, c));
    double fd = std::fabs(residual_at(fam, equation, d));
    while (hi - lo > 1e-12) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = std::fabs(residual_at(fam, equation, c));
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = std::fabs(residual_at(fam, equation, d));
        }
    }
    double xm = 0.5 * (lo + hi);
    *fmin = std::fabs(residual_at(fam, equation, xm));
    return xm;
}

} // namespace

std::vector<AlphaRoot> alpha_roots(const LinearFamily& family) {
    const int M = 10000;
    const double w = family.hi() - family.lo();
    std::vector<AlphaRoot> out;
    for (int equation = 1; equation <= 2; ++equation) {
        std::vector<double> xs(M), rs(M);
        double max_abs = 0;
        for (int i = 0; i < M; ++i) {
            xs[i] = family.lo() + w * (i + 0.5) / M;
            rs[i] = residual_at(family, equation, xs[i]);
            max_abs = std::max(max_abs, std::fabs(rs[i]));
        }
        if (max_abs < 1e-10)
            throw degeneracy_error("alpha_roots: closure residual " + std::to_string(equation) +
                                   " vanishes identically on this family");
        std::vector<double> roots;
        for (int i = 0; i + 1 < M; ++i) {
            if (rs[i] == 0) {
                roots.push_back(xs[i]);
            } else if ((rs[i] < 0) != (rs[i + 1] < 0) && rs[i + 1] != 0) {
                roots.push_back(bisect_root(family, equation, xs[i], xs[i + 1]));
            }
        }
        if (M > 0 && rs[M - 1] == 0) roots.push_back(xs[M - 1]);
        std::vector<double> dedup;
        for (double r : roots)
            if (dedup.empty() || r - dedup.back() > 1e-9) dedup.push_back(r);
        for (double r : dedup) out.push_back({r, equation, false});
        // Sign-preserving roots: interior local minima of |r| that refine
        // to zero.  The first and last cells are skipped so a residual
        // that merely decays toward an interval endpoint is not reported.
        for (int i = 1; i + 1 < M; ++i) {
            if (i < 2 || i + 2 >= M) continue;
            if (std::fabs(rs[i]) > 1e-6) continue;
            if (std::fabs(rs[i]) > std::fabs(rs[i - 1]) || std::fabs(rs[i]) > std::fabs(rs[i + 1]))
                continue;
            double fmin;
            double xm = golden_min(family, equation, xs[i - 1], xs[i + 1], &fmin);
            if (fmin >= 1e-13) continue;
            bool known = false;
            for (double r : dedup)
                if (std::fabs(r - xm) < 1e-9) known = true;
            if (!known) {
                out.push_back({xm, equation, true});
                dedup.push_back(xm);
                std::sort(dedup.begin(), dedup.end());
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AlphaRoot& a, const AlphaRoot& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.equation < b.equation;
    });
    return out;
}

QuarticCase quartic_case(int k) {
    if (k < 4) throw domain_error("quartic_case: k must be >= 4");
    const double c = cospi(1.0 / k);
    QuarticCase qc;
    qc.A = 8 * c * c * c - 4 * c * c - 8 * c + 5;
    qc.B = -8 * std::pow(c, 5) + 4 * c * c * c + 2 * c * c + 4 * c - 4;
    qc.C = c * c * (2 * c * c + c - 2) * (2 * c * c + c - 2);
    const double r = (2 * c * c + c - 2) / std::sqrt(qc.A);
    qc.u = {c, -c, r, -r};
    std::vector<double> alphas;
    for (double u : qc.u) alphas.push_back(std::acos(std::clamp(u, -1.0, 1.0)) / pi);
    std::sort(alphas.begin(), alphas.end());
    for (double a : alphas) {
        if (!qc.roots.empty() && a - qc.roots.back().alpha < 1e-12) {
            qc.roots.back().double_root = true;
        } else {
            qc.roots.push_back({a, false});
        }
    }
    return qc;
}

double nonexistence_margin(int k) {
    if (k < 6) throw domain_error("nonexistence_margin: defined for k >= 6");
    QuarticCase qc = quartic_case(k);
    double min_abs = std::numeric_limits<double>::infinity();
    for (double u : qc.u) min_abs = std::min(min_abs, std::fabs(u));
    return min_abs - cospi(0.5 - 1.0 / k);
}

} // namespace a3b
