#include "eulerlab/circle_map.hpp"

namespace eulerlab {

CircleMap CircleMap::from_lift(const PLLift& lift) {
    if (!lift.strict()) fail(ErrorKind::InvalidLift, "circle maps need a strict lift");
    Int k = floor_rat(lift(Rat(0)));
    return CircleMap(lift.shifted(-k));
}

CircleMap CircleMap::compose(const CircleMap& g) const {
    return from_lift(compose_lifts(lift_, g.lift_));
}

CircleMap CircleMap::inverse() const { return from_lift(invert_lift(lift_)); }

bool CircleMap::is_rotation() const {
    return lift_.points().size() == 1 && lift_.points()[0].yl == lift_.points()[0].yr;
}

Lift canonicalize(const PLLift& lift) {
    if (!lift.strict()) fail(ErrorKind::NonInvertible, "canonicalize needs a strict lift");
    Int k = floor_rat(lift(Rat(0)));
    return Lift{CircleMap::from_lift(lift.shifted(-k)), k};
}

Lift Lift::compose(const Lift& other) const {
    CircleMap b = base.compose(other.base);
    // ε̄(b1, b2) = ⌊ s̄(b1)(s̄(b2)(0)) ⌋
    Int carry = floor_rat(base.canonical_lift()(other.base.canonical_lift()(Rat(0))));
    return Lift{b, carry + offset + other.offset};
}

Lift Lift::inverse() const {
    CircleMap binv = base.inverse();
    Int carry = floor_rat(binv.canonical_lift()(base.canonical_lift()(Rat(0))));
    return Lift{binv, -offset - carry};
}

MonotoneDegreeOneMap MonotoneDegreeOneMap::from_lift(const PLLift& lift) {
    Int k = floor_rat(lift(Rat(0)));
    return MonotoneDegreeOneMap(lift.shifted(-k).as_nondecreasing());
}

}  // namespace eulerlab
