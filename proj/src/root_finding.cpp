#include "goat/root_finding.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "goat/errors.hpp"

namespace goat {

namespace {

void check_bracket(double f_lo, double f_hi) {
    if (std::isnan(f_lo) || std::isnan(f_hi)) throw BracketError("root bracket: function returned NaN");
    if ((f_lo > 0.0 && f_hi > 0.0) || (f_lo < 0.0 && f_hi < 0.0)) {
        throw BracketError("root bracket endpoints do not straddle zero");
    }
}

}  // namespace

RootResult brent_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                      int max_iterations) {
    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    int evaluations = 2;
    check_bracket(fa, fb);
    if (fa == 0.0) return {a, fa, evaluations};
    if (fb == 0.0) return {b, fb, evaluations};

    // b is the best estimate, c the contrapoint so that the root lies between b and c.
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(c - b) <= tol || std::abs(xm) <= tol1 || fb == 0.0) return {b, fb, evaluations};

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
        ++evaluations;
        if (std::isnan(fb)) throw NumericError("brent_root: function returned NaN");
    }
    throw NumericError("brent_root: iteration limit reached");
}

RootResult bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                       int max_iterations) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    int evaluations = 2;
    check_bracket(f_lo, f_hi);
    if (f_lo == 0.0) return {lo, f_lo, evaluations};
    if (f_hi == 0.0) return {hi, f_hi, evaluations};
    for (int iter = 0; iter < max_iterations; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol || mid == lo || mid == hi) {
            const double f_mid = f(mid);
            return {mid, f_mid, evaluations + 1};
        }
        const double f_mid = f(mid);
        ++evaluations;
        if (f_mid == 0.0) return {mid, f_mid, evaluations};
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    throw NumericError("bisect_root: iteration limit reached");
}

}  // namespace goat
