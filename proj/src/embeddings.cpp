#include "gfb/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "gfb/curvature_field.hpp"
#include "gfb/integration.hpp"

namespace gfb::embed {

namespace {

// -sqrt(l'^2 - 1), guarding the isometry condition l' >= 1.
double slope(const ArclengthRelation& rel, double r) {
    const double lp = rel.l_prime(r);
    if (lp < 1.0 - 1e-12)
        throw DomainError("profile: l'(r) < 1, relation not immersible");
    return -std::sqrt(std::max(0.0, lp * lp - 1.0));
}

} // namespace

ArclengthRelation lambert_relation() {
    const double e = std::exp(1.0);
    ArclengthRelation rel;
    rel.l_of_r = [e](double r) {
        return (e + r) * std::log(e + r) - e - r;
    };
    rel.l_prime = [e](double r) { return std::log(e + r); };
    rel.r_of_l = [e](double l) {
        if (l == 0.0) return 0.0;
        // l = e w e^w with w = W0(l/e), so r = e(e^w - 1); expm1 keeps full
        // precision where l/w - e cancels near l = 0.
        return e * std::expm1(field::lambert_w0(l / e));
    };
    return rel;
}

ArclengthRelation flat_relation() {
    ArclengthRelation rel;
    rel.l_of_r = [](double r) { return r; };
    rel.l_prime = [](double) { return 1.0; };
    rel.r_of_l = [](double l) { return l; };
    return rel;
}

double profile_from_arclength(const ArclengthRelation& rel, double r,
                              double abs_tol) {
    if (r < 0.0) throw DomainError("profile: r must be >= 0");
    if (r == 0.0) return 0.0;
    return quad::quad([&](double rho) { return slope(rel, rho); }, 0.0, r,
                      abs_tol);
}

Profile::Profile(ArclengthRelation rel, double r_max, double abs_tol)
    : rel_(std::move(rel)), r_max_(r_max) {
    if (!(r_max > 0.0)) throw DomainError("Profile: r_max must be > 0");
    const double node_tol = std::max(abs_tol * 100.0, 1e-9);
    // Recursive node placement: split a segment until the cubic Hermite
    // interpolant matches the quadrature value at its midpoint. Heights are
    // accumulated segment-by-segment, never re-integrated from 0.
    rs_.push_back(0.0);
    hs_.push_back(0.0);
    dhs_.push_back(slope(rel_, 0.0));
    auto seg = [&](double x0, double x1) {
        return quad::quad([&](double rho) { return slope(rel_, rho); }, x0, x1,
                          abs_tol);
    };
    auto build = [&](auto&& self, double a, double ha, double da, double b,
                     double hb, double db, int depth) -> void {
        const double m = (a + b) / 2.0;
        const double hm = ha + seg(a, m);
        const double pred = 0.5 * (ha + hb) + (b - a) / 8.0 * (da - db);
        if (std::abs(pred - hm) > node_tol && depth < 24) {
            const double dm = slope(rel_, m);
            self(self, a, ha, da, m, hm, dm, depth + 1);
            self(self, m, hm, dm, b, hb, db, depth + 1);
            return;
        }
        rs_.push_back(b);
        hs_.push_back(hb);
        dhs_.push_back(db);
    };
    const double hend = seg(0.0, r_max);
    build(build, 0.0, 0.0, dhs_[0], r_max, hend, slope(rel_, r_max), 0);
}

double Profile::h(double r) const {
    if (r < 0.0 || r > r_max_ * (1.0 + 1e-12))
        throw DomainError("Profile::h: r outside cached range");
    const auto it = std::upper_bound(rs_.begin(), rs_.end(), r);
    size_t i = it == rs_.begin() ? 0 : (it - rs_.begin() - 1);
    if (i + 1 >= rs_.size()) i = rs_.size() - 2;
    const double a = rs_[i], b = rs_[i + 1], w = b - a;
    const double t = (r - a) / w;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * hs_[i] + (t3 - 2 * t2 + t) * w * dhs_[i] +
           (-2 * t3 + 3 * t2) * hs_[i + 1] + (t3 - t2) * w * dhs_[i + 1];
}

double Profile::h_prime(double r) const { return slope(rel_, r); }

Vec3 immerse(const Profile& prof, double r, double phi) {
    return Vec3{r * std::cos(phi), r * std::sin(phi), prof.h(r)};
}

} // namespace gfb::embed
