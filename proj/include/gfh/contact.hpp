#pragma once

// Floating-point verification of the contact-geometric formulas: the jet
// space embedding sigma and the Bhupal variant, the contact-factor fit via
// finite differences, the cyclic actions on base and jet space, the
// Legendrian lift gamma of a contactomorphism, radial Hamiltonian lifts and
// their translated points. Everything here is numerical; the homological
// machinery stays exact.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "morse_bott.hpp"  // LensData

namespace gfh::contact {

// Tolerances for the two kinds of checks: finite-difference residuals and
// closed-form identities.
struct Tolerances {
    double finite_difference = 1e-6;
    double closed_form = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

// A point of R^{2(2n+1)+1}: base copy (x, y, z), image copy (X, Y, Z) and
// the conformal coordinate theta.
struct ProductPoint {
    std::vector<double> x, y, X, Y;
    double z = 0, Z = 0, theta = 0;

    long n() const { return static_cast<long>(x.size()); }

    // flat coordinate order: x, y, z, X, Y, Z, theta
    static ProductPoint from_flat(const std::vector<double>& v, long n) {
        ProductPoint p;
        p.x.assign(v.begin(), v.begin() + n);
        p.y.assign(v.begin() + n, v.begin() + 2 * n);
        p.z = v[2 * n];
        p.X.assign(v.begin() + 2 * n + 1, v.begin() + 3 * n + 1);
        p.Y.assign(v.begin() + 3 * n + 1, v.begin() + 4 * n + 1);
        p.Z = v[4 * n + 1];
        p.theta = v[4 * n + 2];
        return p;
    }
    std::vector<double> to_flat() const {
        std::vector<double> v;
        v.insert(v.end(), x.begin(), x.end());
        v.insert(v.end(), y.begin(), y.end());
        v.push_back(z);
        v.insert(v.end(), X.begin(), X.end());
        v.insert(v.end(), Y.begin(), Y.end());
        v.push_back(Z);
        v.push_back(theta);
        return v;
    }
};

// A point of J^1 R^{2n+1}; q and p have length 2n+1 in the order
// (x-block, y-block, z).
struct JetPoint {
    std::vector<double> q, p;
    double u = 0;

    std::vector<double> to_flat() const {
        std::vector<double> v = q;
        v.insert(v.end(), p.begin(), p.end());
        v.push_back(u);
        return v;
    }
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace detail {

inline JetPoint sigma_impl(const ProductPoint& pt, bool corrupt) {
    const long n = pt.n();
    const double e2 = std::exp(pt.theta / 2);
    JetPoint j;
    j.q.resize(2 * n + 1);
    j.p.resize(2 * n + 1);
    for (long i = 0; i < n; ++i) {
        j.q[i] = (e2 * pt.x[i] + pt.X[i]) / 2;
        j.q[n + i] = (e2 * pt.y[i] + pt.Y[i]) / 2;
        // the corrupt hook drops the conformal factor in the first momentum
        // slot; used as a negative control only
        j.p[i] = pt.Y[i] - (corrupt ? 1.0 : e2) * pt.y[i];
        j.p[n + i] = e2 * pt.x[i] - pt.X[i];
    }
    j.q[2 * n] = pt.z;
    j.p[2 * n] = std::exp(pt.theta) - 1;
    double cross = 0;
    for (long i = 0; i < n; ++i) cross += pt.x[i] * pt.Y[i] - pt.y[i] * pt.X[i];
    j.u = pt.Z - pt.z + e2 * cross / 2;
    return j;
}

}  // namespace detail

// The symmetric contact embedding sending the diagonal to the 0-section.
inline JetPoint sigma(const ProductPoint& pt) {
    return detail::sigma_impl(pt, false);
}

inline JetPoint sigma_corrupted(const ProductPoint& pt) {
    return detail::sigma_impl(pt, true);
}

// Bhupal's embedding. Also sends the diagonal to the 0-section, but is not
// symmetric with respect to the weighted cyclic action.
inline JetPoint sigma_bhupal(const ProductPoint& pt) {
    const long n = pt.n();
    const double e = std::exp(pt.theta);
    JetPoint j;
    j.q.resize(2 * n + 1);
    j.p.resize(2 * n + 1);
    for (long i = 0; i < n; ++i) {
        j.q[i] = pt.x[i];
        j.q[n + i] = pt.Y[i];
        j.p[i] = pt.Y[i] - e * pt.y[i];
        j.p[n + i] = pt.x[i] - pt.X[i];
    }
    j.q[2 * n] = pt.z;
    j.p[2 * n] = e - 1;
    j.u = dot(pt.x, pt.Y) - dot(pt.X, pt.Y) + pt.Z - pt.z;
    return j;
}

using SigmaMap = std::function<JetPoint(const ProductPoint&)>;

struct ContactFit {
    double lambda = 0;
    double residual = 0;
};

// Pulls back the canonical 1-form p dq - du through `map` with a
// central-difference Jacobian of step h, and fits it against the product
// contact form
//   A = e^theta (dz - (y dx - x dy)/2) - (dZ - (Y dX - X dY)/2).
// A contact embedding gives residual ~ 0 with lambda != 0. The sign of the
// canonical form is chosen so that the symmetric embedding has lambda = +1;
// it fixes the 0-section pointwise with identity 1-jet data there.
inline ContactFit contact_factor_residual(const SigmaMap& map,
                                          const ProductPoint& pt, double h) {
    if (!(h > 0)) throw std::invalid_argument("need h > 0");
    const long n = pt.n();
    const long dim = 4 * n + 3;
    const std::vector<double> base = pt.to_flat();
    const JetPoint at = map(pt);

    std::vector<double> pullback(dim), form(dim);
    for (long i = 0; i < dim; ++i) {
        std::vector<double> plus = base, minus = base;
        plus[i] += h;
        minus[i] -= h;
        JetPoint jp = map(ProductPoint::from_flat(plus, n));
        JetPoint jm = map(ProductPoint::from_flat(minus, n));
        double du = (jp.u - jm.u) / (2 * h);
        double pdq = 0;
        for (std::size_t c = 0; c < at.q.size(); ++c)
            pdq += at.p[c] * (jp.q[c] - jm.q[c]) / (2 * h);
        pullback[i] = pdq - du;
    }
    const double e = std::exp(pt.theta);
    for (long i = 0; i < n; ++i) {
        form[i] = -e * pt.y[i] / 2;              // dx_i
        form[n + i] = e * pt.x[i] / 2;           // dy_i
        form[2 * n + 1 + i] = pt.Y[i] / 2;       // dX_i
        form[3 * n + 1 + i] = -pt.X[i] / 2;      // dY_i
    }
    form[2 * n] = e;        // dz
    form[4 * n + 1] = -1;   // dZ
    form[4 * n + 2] = 0;    // dtheta

    double pa = dot(pullback, form), aa = dot(form, form);
    ContactFit fit;
    fit.lambda = pa / aa;
    double r2 = 0;
    for (long i = 0; i < dim; ++i) {
        double d = pullback[i] - fit.lambda * form[i];
        r2 += d * d;
    }
    fit.residual = std::sqrt(r2);
    return fit;
}

// The weighted rotation on the base R^{2n+1} = (x, y, z): each complex
// coordinate pair turns by 2 pi w_i / k, z is fixed.
inline std::vector<double> tau_base(const std::vector<double>& q,
                                    const LensData& lens, long power = 1) {
    const long n = lens.n;
    std::vector<double> r = q;
    for (long i = 0; i < n; ++i) {
        double ang = 2 * M_PI * lens.weights[i] * power / lens.k;
        double c = std::cos(ang), s = std::sin(ang);
        r[i] = q[i] * c - q[n + i] * s;
        r[n + i] = q[n + i] * c + q[i] * s;
    }
    return r;
}

// On J^1: rotate base and momentum pairs, fix q_z, p_z and u. The rotation
// is orthogonal, so the inverse-transpose action on momenta is the same
// rotation.
inline JetPoint tau_jet(const JetPoint& j, const LensData& lens,
                        long power = 1) {
    JetPoint r = j;
    r.q = tau_base(j.q, lens, power);
    r.p = tau_base(j.p, lens, power);
    return r;
}

inline ProductPoint tau_product(const ProductPoint& pt, const LensData& lens,
                                long power = 1) {
    const long n = lens.n;
    ProductPoint r = pt;
    for (long i = 0; i < n; ++i) {
        double ang = 2 * M_PI * lens.weights[i] * power / lens.k;
        double c = std::cos(ang), s = std::sin(ang);
        r.x[i] = pt.x[i] * c - pt.y[i] * s;
        r.y[i] = pt.y[i] * c + pt.x[i] * s;
        r.X[i] = pt.X[i] * c - pt.Y[i] * s;
        r.Y[i] = pt.Y[i] * c + pt.X[i] * s;
    }
    return r;
}

// A sampled contactomorphism of R^{2n+1}: image components and the conformal
// exponent g at a base point.
struct ContactMapSample {
    std::vector<double> phi1, phi2;  // x- and y-components, length n
    double phi3 = 0;
    double g = 0;
};

using Contactomorphism =
    std::function<ContactMapSample(const std::vector<double>& q)>;

inline ProductPoint graph_point(const ContactMapSample& s,
                                const std::vector<double>& q, long n) {
    ProductPoint pt;
    pt.x.assign(q.begin(), q.begin() + n);
    pt.y.assign(q.begin() + n, q.begin() + 2 * n);
    pt.z = q[2 * n];
    pt.X = s.phi1;
    pt.Y = s.phi2;
    pt.Z = s.phi3;
    pt.theta = s.g;
    return pt;
}

// gamma_phi = sigma o gr_phi, the Legendrian lift of the graph of phi.
inline JetPoint gamma(const Contactomorphism& phi, const std::vector<double>& q,
                      long n) {
    return sigma(graph_point(phi(q), q, n));
}

// Same composition through an arbitrary sigma-like embedding; used for the
// Bhupal negative control.
inline JetPoint gamma_via(const SigmaMap& map, const Contactomorphism& phi,
                          const std::vector<double>& q, long n) {
    return map(graph_point(phi(q), q, n));
}

// || gamma(tau q) - tau(gamma(q)) ||; vanishes for equivariant phi.
inline double equivariance_residual(const Contactomorphism& phi,
                                    const LensData& lens,
                                    const std::vector<double>& q) {
    JetPoint lhs = gamma(phi, tau_base(q, lens), lens.n);
    JetPoint rhs = tau_jet(gamma(phi, q, lens.n), lens);
    std::vector<double> a = lhs.to_flat(), b = rhs.to_flat();
    double r2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r2 += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(r2);
}

inline double equivariance_residual_via(const SigmaMap& map,
                                        const Contactomorphism& phi,
                                        const LensData& lens,
                                        const std::vector<double>& q) {
    JetPoint lhs = gamma_via(map, phi, tau_base(q, lens), lens.n);
    JetPoint rhs = tau_jet(gamma_via(map, phi, q, lens.n), lens);
    std::vector<double> a = lhs.to_flat(), b = rhs.to_flat();
    double r2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r2 += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(r2);
}

// A radial Hamiltonian map on R^{2n}: w -> e^{i (2pi/R) rho'(s)} w with
// s = (pi/R) |w|^2, lifted to R^{2n} x S^1 with conformal exponent 0 and
// z-shift F(s) = rho(s) - s rho'(s). The lift convention is a derived
// obligation: dF must equal Phi^* lambda_0 - lambda_0, which
// radial_lift_form_residual checks numerically.
struct RadialContactMap {
    long n = 1;
    double R = 1;
    std::function<double(double)> rho;
    std::function<double(double)> drho;
    std::function<double(double)> ddrho;

    double s_of(const std::vector<double>& x,
                const std::vector<double>& y) const {
        return M_PI / R * (dot(x, x) + dot(y, y));
    }
    double angle(double s) const { return 2 * M_PI / R * drho(s); }
    double action(double s) const { return rho(s) - s * drho(s); }
};

inline Contactomorphism radial_lift(const RadialContactMap& m) {
    return [m](const std::vector<double>& q) {
        const long n = m.n;
        std::vector<double> x(q.begin(), q.begin() + n);
        std::vector<double> y(q.begin() + n, q.begin() + 2 * n);
        double s = m.s_of(x, y);
        double ang = m.angle(s);
        double c = std::cos(ang), si = std::sin(ang);
        ContactMapSample out;
        out.phi1.resize(n);
        out.phi2.resize(n);
        for (long i = 0; i < n; ++i) {
            out.phi1[i] = x[i] * c - y[i] * si;
            out.phi2[i] = y[i] * c + x[i] * si;
        }
        out.phi3 = q[2 * n] + m.action(s);
        out.g = 0;
        return out;
    };
}

// Checks the z-shift convention: (Phi^* lambda_0 - lambda_0 - dF) applied to
// each coordinate direction at w = (x, y), via central differences. Returns
// the max absolute component.
inline double radial_lift_form_residual(const RadialContactMap& m,
                                        const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        double h = 1e-6) {
    const long n = m.n;
    auto phi = [&](const std::vector<double>& w) {
        std::vector<double> wx(w.begin(), w.begin() + n);
        std::vector<double> wy(w.begin() + n, w.end());
        double s = m.s_of(wx, wy);
        double ang = m.angle(s);
        double c = std::cos(ang), si = std::sin(ang);
        std::vector<double> out(2 * n);
        for (long i = 0; i < n; ++i) {
            out[i] = wx[i] * c - wy[i] * si;
            out[n + i] = wy[i] * c + wx[i] * si;
        }
        return out;
    };
    std::vector<double> w = x;
    w.insert(w.end(), y.begin(), y.end());
    std::vector<double> img = phi(w);
    double s = m.s_of(x, y);
    double worst = 0;
    for (long i = 0; i < 2 * n; ++i) {
        std::vector<double> plus = w, minus = w;
        plus[i] += h;
        minus[i] -= h;
        std::vector<double> jp = phi(plus), jm = phi(minus);
        // lambda_0 = sum (y dx - x dy)/2 evaluated on the image velocity
        double pull = 0;
        for (long c = 0; c < n; ++c) {
            double dx = (jp[c] - jm[c]) / (2 * h);
            double dy = (jp[n + c] - jm[n + c]) / (2 * h);
            pull += (img[n + c] * dx - img[c] * dy) / 2;
        }
        double lam0 = (i < n) ? w[n + i] / 2 : -w[i - n] / 2;
        // dF = F'(s) ds with F' = -s rho'' and ds = (2pi/R) (x dx + y dy)
        double df = -s * m.ddrho(s) * (2 * M_PI / m.R) * w[i];
        worst = std::max(worst, std::abs(pull - lam0 - df));
    }
    return worst;
}

struct TranslatedPoint {
    long j = 0;       // rho'(s) = -jR
    double s = 0;     // radius parameter of the fixed circle
    double action = 0;
    bool degenerate = false;  // rho''(s) ~ 0 at the crossing
};

// Roots of rho'(s) = -jR on [0, 1], j = 1, 2, ...; rho' is nondecreasing so
// each level is crossed once, found by bisection.
inline std::vector<TranslatedPoint> translated_points(
    const RadialContactMap& m, double tol = 1e-12) {
    std::vector<TranslatedPoint> out;
    const double d0 = m.drho(0.0);
    for (long j = 1; -j * m.R > d0; ++j) {
        double target = -j * m.R;
        double lo = 0, hi = 1;
        // drho(lo) < target <= drho(hi) = 0
        for (int it = 0; it < 200 && hi - lo > tol; ++it) {
            double mid = (lo + hi) / 2;
            if (m.drho(mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        double s = (lo + hi) / 2;
        TranslatedPoint tp;
        tp.j = j;
        tp.s = s;
        tp.action = m.action(s);
        tp.degenerate = std::abs(m.ddrho(s)) < 1e-9;
        out.push_back(tp);
    }
    return out;
}

// Fiber-critical locus check for a generating function with one fiber
// variable: verifies that precomposing the base with tau produces the
// Legendrian rotated by tau^{-1}. Samples a grid of base points, solves
// dS/dxi = 0 by Newton from several seeds, and compares jet samples.
struct PullbackReport {
    bool ok = true;
    double max_error = 0;
    long samples = 0;
    long nondegeneracy_failures = 0;
};

using GeneratingFunction =
    std::function<double(const std::vector<double>& q, double xi)>;

inline PullbackReport pullback_generating_check(const GeneratingFunction& S,
                                                const LensData& lens,
                                                long grid = 3,
                                                double tol = 1e-6) {
    const long n = lens.n;
    const long dim = 2 * n + 1;
    const double h = 1e-6;
    PullbackReport rep;

    auto dS_dxi = [&](const GeneratingFunction& F, const std::vector<double>& q,
                      double xi) {
        return (F(q, xi + h) - F(q, xi - h)) / (2 * h);
    };
    auto solve_xi = [&](const GeneratingFunction& F,
                        const std::vector<double>& q, bool& ok) {
        double xi = 0.1;
        for (int it = 0; it < 100; ++it) {
            double f = dS_dxi(F, q, xi);
            double fp = (F(q, xi + h) - 2 * F(q, xi) + F(q, xi - h)) / (h * h);
            if (std::abs(fp) < 1e-10) {
                ok = false;
                return xi;
            }
            double step = f / fp;
            xi -= step;
            if (std::abs(step) < 1e-12) break;
        }
        ok = std::abs(dS_dxi(F, q, xi)) < 1e-8;
        return xi;
    };
    auto jet_sample = [&](const GeneratingFunction& F,
                          const std::vector<double>& q, double xi) {
        JetPoint j;
        j.q = q;
        j.p.resize(dim);
        for (long i = 0; i < dim; ++i) {
            std::vector<double> qp = q, qm = q;
            qp[i] += h;
            qm[i] -= h;
            j.p[i] = (F(qp, xi) - F(qm, xi)) / (2 * h);
        }
        j.u = F(q, xi);
        return j;
    };

    GeneratingFunction S_bar = [&S, &lens, n](const std::vector<double>& q,
                                              double xi) {
        std::vector<double> tq = tau_base(q, lens);
        return S(tq, xi);
    };

    // iterate a grid in [-1, 1]^dim
    std::vector<long> idx(dim, 0);
    bool done = false;
    while (!done) {
        std::vector<double> q(dim);
        for (long i = 0; i < dim; ++i)
            q[i] = grid == 1 ? 0.0 : -1.0 + 2.0 * idx[i] / (grid - 1);

        // the fiber equations of S over tau(q) and of S_bar over q coincide
        std::vector<double> tq = tau_base(q, lens);
        bool ok = true;
        double xi = solve_xi(S, tq, ok);
        if (!ok) {
            ++rep.nondegeneracy_failures;
        } else {
            JetPoint bar = jet_sample(S_bar, q, xi);
            JetPoint direct = tau_jet(jet_sample(S, tq, xi), lens, -1);
            std::vector<double> a = bar.to_flat(), b = direct.to_flat();
            for (std::size_t i = 0; i < a.size(); ++i)
                rep.max_error = std::max(rep.max_error, std::abs(a[i] - b[i]));
            ++rep.samples;
        }

        done = true;
        for (long i = 0; i < dim; ++i) {
            if (++idx[i] < grid) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }
    rep.ok = rep.nondegeneracy_failures == 0 && rep.max_error < tol;
    return rep;
}

}  // namespace gfh::contact
