#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclokit {

/// A certified closed interval [lo, hi] for a real constant, together with
/// the truncation point that produced it and whether it depends on GRH.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t point = 0;   // truncation point (the y or x used)
    bool conditional = false;  // true when the bound assumes GRH
    std::string source;        // which bound produced it

    Bracket() = default;
    Bracket(double lo_, double hi_, std::uint64_t point_, bool conditional_, std::string source_)
        : lo(lo_), hi(hi_), point(point_), conditional(conditional_), source(std::move(source_)) {
        if (!(lo <= hi)) throw std::logic_error("Bracket: lo > hi");
    }

    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }

    /// Contained in `outer` up to floating-point slack.
    bool nested_in(const Bracket& outer, double slack = 1e-12) const {
        return lo >= outer.lo - slack && hi <= outer.hi + slack;
    }
};

}  // namespace cyclokit
