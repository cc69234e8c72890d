#pragma once

#include "eulerlab/pl_lift.hpp"

namespace eulerlab {

/// An orientation-preserving PL circle homeomorphism, stored as its canonical
/// lift: the unique strict lift with value at 0 inside [0,1). This is the
/// section s̄ of Homeo⁺_Z(R) -> Homeo⁺(S¹).
class CircleMap {
public:
    static CircleMap identity() { return CircleMap(PLLift::identity()); }

    /// Rotation by a (reduced mod 1).
    static CircleMap rotation(const Rat& a) { return CircleMap(PLLift::translation(mod1(a))); }

    /// Projects any strict lift to its circle map (drops the integer offset).
    static CircleMap from_lift(const PLLift& lift);

    const PLLift& canonical_lift() const { return lift_; }

    /// Image of a circle point; both in [0,1).
    Rat apply(const Rat& x) const { return frac_rat(lift_(x)); }

    /// this ∘ g.
    CircleMap compose(const CircleMap& g) const;

    CircleMap inverse() const;

    bool is_rotation() const;
    /// Rotation amount in [0,1); only meaningful when is_rotation().
    Rat rotation_amount() const { return lift_.points()[0].yr; }

    bool operator==(const CircleMap&) const = default;

private:
    explicit CircleMap(PLLift lift) : lift_(std::move(lift)) {}

    PLLift lift_;
};

/// s̄(base) ∘ τ^offset where τ(x) = x+1. Every lift of a circle map is
/// uniquely of this shape, so equality is (base, offset) equality.
struct Lift {
    CircleMap base;
    Int offset;

    static Lift identity() { return {CircleMap::identity(), Int(0)}; }

    Rat operator()(const Rat& x) const { return base.canonical_lift()(x) + Rat(offset); }

    /// this ∘ other, computed through the extension algebra:
    /// s̄(b1)τ^{k1} s̄(b2)τ^{k2} = s̄(b1 b2) τ^{ε̄(b1,b2)+k1+k2}.
    Lift compose(const Lift& other) const;

    Lift inverse() const;

    /// The underlying PL lift (base shifted by offset).
    PLLift as_pl() const { return base.canonical_lift().shifted(offset); }

    bool operator==(const Lift&) const = default;
};

/// Splits a strict lift F as s̄(base) ∘ τ^⌊F(0)⌋.
Lift canonicalize(const PLLift& lift);

/// A non-decreasing degree-one self map of the circle (jumps and flat
/// segments allowed), normalized so the stored lift has value at 0 in [0,1).
class MonotoneDegreeOneMap {
public:
    /// Normalizes mod 1 and re-tags as nondecreasing.
    static MonotoneDegreeOneMap from_lift(const PLLift& lift);

    static MonotoneDegreeOneMap constant(const Rat& x0) {
        return MonotoneDegreeOneMap(PLLift::constant(mod1(x0)));
    }

    static MonotoneDegreeOneMap identity() {
        return MonotoneDegreeOneMap(PLLift::identity().as_nondecreasing());
    }

    const PLLift& lift() const { return lift_; }

    Rat apply(const Rat& x) const { return frac_rat(lift_(x)); }

    /// True when the slice is a circle homeomorphism: continuous (no jumps)
    /// and strictly increasing (no flat segments).
    bool is_homeomorphism() const { return !lift_.has_jumps() && !lift_.has_flats(); }

    bool operator==(const MonotoneDegreeOneMap&) const = default;

private:
    explicit MonotoneDegreeOneMap(PLLift lift) : lift_(std::move(lift)) {}

    PLLift lift_;
};

}  // namespace eulerlab
