#pragma once
#include <functional>
#include <vector>

#include "gfb/common.hpp"

namespace gfb::embed {

// Rotation-symmetric arclength relation l(r) with l(0) = 0 and l'(r) >= 1.
struct ArclengthRelation {
    std::function<double(double)> l_of_r;
    std::function<double(double)> l_prime;
    std::function<double(double)> r_of_l;
};

// l(r) = (e+r) ln(e+r) - e - r; r(l) = l / W0(l/e) - e.
ArclengthRelation lambert_relation();
// l(r) = r (flat plane).
ArclengthRelation flat_relation();

// Profile height by direct quadrature: h(r) = -int_0^r sqrt(l'^2 - 1) drho.
double profile_from_arclength(const ArclengthRelation& rel, double r,
                              double abs_tol = 1e-10);

// Cached profile on an adaptive grid with cubic Hermite interpolation
// (endpoint derivatives h' = -sqrt(l'^2 - 1) are exact).
class Profile {
  public:
    Profile(ArclengthRelation rel, double r_max, double abs_tol = 1e-10);
    double h(double r) const;
    double h_prime(double r) const;
    double r_max() const { return r_max_; }

  private:
    ArclengthRelation rel_;
    double r_max_;
    std::vector<double> rs_, hs_, dhs_;
};

struct Vec3 {
    double x, y, z;
};

// Immersion point (r cos(phi), r sin(phi), h(r)).
Vec3 immerse(const Profile& prof, double r, double phi);

} // namespace gfb::embed
