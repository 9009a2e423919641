#pragma once

#include "freealg/ncpoly.hpp"

namespace freealg {

/// Drop every component of degree > cap.
NcPoly truncate_poly(const NcPoly& p, long cap);

/// Element of the formal-series algebra over a finite generator window,
/// stored exactly up to an explicit truncation degree.  Arithmetic between
/// two series is exact below the smaller of the two caps, which becomes the
/// cap of the result.
class WindowSeries {
public:
    WindowSeries(NcPoly p, long cap)
        : poly_(truncate_poly(p, cap)), cap_(cap) {
        if (cap < 0) throw std::invalid_argument("negative series cap");
    }

    static WindowSeries zero(unsigned long characteristic, long cap) {
        return WindowSeries(NcPoly::zero(characteristic), cap);
    }

    const NcPoly& poly() const { return poly_; }
    long cap() const { return cap_; }
    unsigned long characteristic() const { return poly_.characteristic(); }

    bool is_zero() const { return poly_.is_zero(); }
    /// Order of the series: degree of the lowest nonzero component,
    /// kPosInfinity when zero up to the cap.
    long nu_low() const { return poly_.nu_low(); }

    WindowSeries operator-() const { return WindowSeries(-poly_, cap_); }
    friend WindowSeries operator+(const WindowSeries& a, const WindowSeries& b) {
        return WindowSeries(a.poly_ + b.poly_, std::min(a.cap_, b.cap_));
    }
    friend WindowSeries operator-(const WindowSeries& a, const WindowSeries& b) {
        return WindowSeries(a.poly_ - b.poly_, std::min(a.cap_, b.cap_));
    }
    friend WindowSeries operator*(const WindowSeries& a, const WindowSeries& b) {
        return WindowSeries(a.poly_ * b.poly_, std::min(a.cap_, b.cap_));
    }
    friend WindowSeries operator*(const Scalar& c, const WindowSeries& a) {
        return WindowSeries(c * a.poly_, a.cap_);
    }

    /// Equality of the stored truncations; caps must agree.
    bool operator==(const WindowSeries& o) const {
        return cap_ == o.cap_ && poly_ == o.poly_;
    }

private:
    NcPoly poly_;
    long cap_;
};

/// Two-sided inverse up to the cap: series_invert(s) * s and
/// s * series_invert(s) both equal 1 in every degree <= cap.  Requires a
/// nonzero constant term; throws std::domain_error otherwise.
WindowSeries series_invert(const WindowSeries& s);

}  // namespace freealg
