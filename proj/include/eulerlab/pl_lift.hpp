#pragma once

#include <functional>
#include <vector>

#include "eulerlab/errors.hpp"
#include "eulerlab/rational.hpp"

namespace eulerlab {

/// One breakpoint of a periodic PL map. `yl` is the limit from the left,
/// `yr` the value (maps are right-continuous); yl < yr encodes a jump.
struct Breakpoint {
    Rat x;
    Rat yl;
    Rat yr;

    bool operator==(const Breakpoint&) const = default;
};

/// Raw, possibly invalid PL data; `PLLift::verify` reports on it.
struct PLData {
    std::vector<Breakpoint> points;
    bool strict = true;
};

/// A monotone PL map F: R -> R with F(x+1) = F(x)+1, stored on one period.
///
/// Breakpoints live at x_0 = 0 < x_1 < ... < x_{k-1} < 1. Segment i
/// interpolates (x_i, yr_i) -> (x_{i+1}, yl_{i+1}); the wraparound segment
/// targets (1, yl_0 + 1). `strict` claims a continuous, strictly increasing
/// map (a lift of a circle homeomorphism); `nondecreasing` allows jumps and
/// flat segments (monotone degree-one maps, CDFs).
///
/// Instances are always valid and canonically coalesced, so operator== is
/// pointwise equality of the underlying functions.
class PLLift {
public:
    static Report verify(const PLData& data);

    /// Validates and coalesces; throws EulerError{InvalidLift} on bad data.
    static PLLift make(PLData data);

    static PLLift identity();

    /// x |-> x + a.
    static PLLift translation(const Rat& a);

    /// Constant circle map x0 on [0,1), extended with degree one.
    static PLLift constant(const Rat& x0);

    const std::vector<Breakpoint>& points() const { return points_; }
    bool strict() const { return strict_; }

    /// F(x) (right-continuous at jumps).
    Rat operator()(const Rat& x) const;

    /// lim_{t -> x-} F(t).
    Rat left_limit(const Rat& x) const;

    /// F + k.
    PLLift shifted(const Int& k) const;

    /// Re-tags as nondecreasing (a strictly valid weakening).
    PLLift as_nondecreasing() const;

    bool has_jumps() const;
    bool has_flats() const;

    /// Geometric equality ignoring the strictness tag.
    bool same_function(const PLLift& other) const { return points_ == other.points_; }

    bool operator==(const PLLift&) const = default;

private:
    PLLift(std::vector<Breakpoint> pts, bool strict) : points_(std::move(pts)), strict_(strict) {}

    std::vector<Breakpoint> points_;
    bool strict_;
};

Rat eval_lift(const PLLift& f, const Rat& x);

/// F after G (i.e. x |-> F(G(x))). Strict iff both are.
PLLift compose_lifts(const PLLift& f, const PLLift& g);

/// Exact inverse of a strict lift; throws EulerError{NonInvertible} otherwise.
PLLift invert_lift(const PLLift& f);

/// Pointwise maximum of a nonempty family.
PLLift pointwise_max(const std::vector<PLLift>& fs);

/// Reconstructs the unique right-continuous PL lift that is linear on the
/// open intervals between consecutive candidate abscissae. `xs` must be
/// sorted, unique, inside [0,1) and contain 0; `eval` supplies exact values.
PLLift rebuild_pl(const std::vector<Rat>& xs, const std::function<Rat(const Rat&)>& eval,
                  bool strict);

}  // namespace eulerlab
