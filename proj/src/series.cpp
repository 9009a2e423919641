#include "freealg/series.hpp"

namespace freealg {

NcPoly truncate_poly(const NcPoly& p, long cap) {
    NcPoly out(p.characteristic());
    for (auto& [w, c] : p.terms()) {
        if (static_cast<long>(w.degree()) > cap) break;
        out.set_coeff(w, c);
    }
    return out;
}

WindowSeries series_invert(const WindowSeries& s) {
    Scalar s0 = s.poly().coeff(Word());
    if (s0.is_zero())
        throw std::domain_error("series with zero constant term has no inverse");
    long cap = s.cap();
    unsigned long ch = s.characteristic();

    // s = s0 (1 - q) with nu_low(q) >= 1, so 1/s = (sum q^m) / s0.
    NcPoly q = NcPoly::constant(Scalar::one(ch)) - s0.inverse() * s.poly();
    NcPoly acc = NcPoly::constant(Scalar::one(ch));
    NcPoly power = acc;
    for (long m = 1; m <= cap; ++m) {
        power = truncate_poly(power * q, cap);
        if (power.is_zero()) break;
        acc += power;
    }
    return WindowSeries(acc * s0.inverse(), cap);
}

}  // namespace freealg
