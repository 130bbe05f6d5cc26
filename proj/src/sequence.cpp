#include "poncelet/sequence.hpp"

#include <cmath>
#include <string>

namespace poncelet {

std::vector<TowerEntry> homothetic_tower(const Triangle& t, double ratio_base, int n) {
    if (n < 1) throw DomainError("tower depth must be at least 1");
    if (ratio_base == 0.0) throw CollapseError("homothety ratio must be nonzero");
    const CenterSet cs = center_set(t);
    const PlacedConic base = conic_with_foci_O_H(t);
    std::vector<TowerEntry> out;
    out.reserve(n);
    double k = 1.0;
    for (int level = 1; level <= n; ++level) {
        k *= ratio_base;
        TowerEntry e;
        e.triangle = homothety_image(t, cs.G, k);
        e.foci = {homothety_point(cs.O, cs.G, k), homothety_point(cs.H, cs.G, k)};
        e.conic = PlacedConic{{base.base.alpha * k * k, base.base.beta * k * k},
                              homothety_point(base.center, cs.G, k),
                              base.rotation};
        out.push_back(e);
    }
    return out;
}

FociPair literal_focus_formulas(Point o, Point h, int n, double ratio_base) {
    const double kn = std::pow(ratio_base, n);
    if (ratio_base == -2.0)
        return {(2.0 + kn) * o + h, 2.0 * o + (1.0 + kn) * h};
    return {(2.0 + kn) * o + h, 2.0 * o + (-1.0 + kn) * h};
}

PonceletConfig config_of(const SequenceState& s) {
    return config_from_pair({{s.c, 0.0}, s.R}, {s.alpha, s.beta});
}

std::vector<SequenceState> poncelet_iterate(double c, double R, int n) {
    if (n < 1) throw DomainError("need at least one state");
    if (c < 0.0 || !(R > 0.0)) throw DomainError("need c >= 0 and R > 0");
    std::vector<SequenceState> out;
    out.reserve(n);
    auto push = [&](int k, double ck, double Rk) {
        SequenceState s;
        s.n = k;
        s.c = ck;
        s.R = Rk;
        s.alpha = Rk * Rk / 4.0;
        s.beta = Rk * Rk / 4.0 - ck * ck;
        out.push_back(s);
    };
    push(1, c, R);
    for (int k = 2; k <= n; ++k) {
        const auto& prev = out.back();
        const double den = prev.R * prev.R - 4.0 * prev.c * prev.c;
        if (std::abs(den) < quad_tol(prev.R))
            throw SingularIterationError("R^2 = 4c^2 at step " + std::to_string(k - 1),
                                         k - 1);
        const double cn = prev.c * (5.0 * prev.R * prev.R - 4.0 * prev.c * prev.c) / den;
        const double rn = 2.0 * std::pow(prev.R, 3) / std::abs(den);
        // mirror across the y-axis to keep the focus on the nonnegative side
        push(k, std::abs(cn), rn);
    }
    return out;
}

std::vector<double> dynamics_orbit(double x0, int n, DynamicsForm form) {
    if (n < 1) throw DomainError("need at least one orbit entry");
    if (x0 < 0.0) throw DomainError("x0 must be nonnegative");
    std::vector<double> out;
    out.reserve(n);
    out.push_back(x0);
    for (int k = 2; k <= n; ++k) {
        const double x = out.back();
        const double den = 1.0 - 4.0 * x * x;
        if (std::abs(x - 0.5) < relative_tolerance())
            throw SingularIterationError("orbit hit the singularity x = 1/2 at step " +
                                             std::to_string(k - 1),
                                         k - 1);
        double next;
        if (form == DynamicsForm::PaperLiteral)
            next = x * (5.0 - 4.0 * x * x) / (2.0 * den);
        else
            next = std::abs(x * (5.0 - 4.0 * x * x) / 2.0); // |sgn(den)| folded in
        out.push_back(next);
    }
    return out;
}

} // namespace poncelet
