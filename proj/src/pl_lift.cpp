#include "eulerlab/pl_lift.hpp"

#include <algorithm>
#include <set>

namespace eulerlab {

namespace {

// Node sequence of one period with the wraparound target appended:
// returns x_{i+1} and yl_{i+1} for segment i, where index k wraps to (1, yl_0+1).
inline Rat next_x(const std::vector<Breakpoint>& pts, std::size_t i) {
    return i + 1 < pts.size() ? pts[i + 1].x : Rat(1);
}
inline Rat next_yl(const std::vector<Breakpoint>& pts, std::size_t i) {
    return i + 1 < pts.size() ? pts[i + 1].yl : Rat(pts[0].yl + 1);
}

// Largest i with pts[i].x <= t, for t in [0,1).
std::size_t segment_index(const std::vector<Breakpoint>& pts, const Rat& t) {
    std::size_t lo = 0, hi = pts.size();
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts[mid].x <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool collinear(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1, const Rat& x2,
               const Rat& y2) {
    return (x1 - x0) * (y2 - y1) == (y1 - y0) * (x2 - x1);
}

}  // namespace

Report PLLift::verify(const PLData& data) {
    Report rep;
    const auto& p = data.points;
    if (p.empty()) {
        rep.violations.push_back("no breakpoints");
        return rep;
    }
    if (p[0].x != 0) rep.violations.push_back("first breakpoint not at x = 0");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].x < 0 || p[i].x >= 1) rep.violations.push_back("breakpoint x outside [0,1)");
        if (i > 0 && !(p[i - 1].x < p[i].x)) rep.violations.push_back("x not increasing");
        if (p[i].yl > p[i].yr) rep.violations.push_back("yL > yR at a breakpoint");
        if (data.strict && p[i].yl != p[i].yr)
            rep.violations.push_back("jump in a strict map");
    }
    if (!rep.violations.empty()) return rep;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat dy = next_yl(p, i) - p[i].yr;
        if (dy < 0) rep.violations.push_back("negative slope segment");
        if (data.strict && dy == 0) rep.violations.push_back("not strictly increasing");
    }
    return rep;
}

PLLift PLLift::make(PLData data) {
    Report rep = verify(data);
    if (!rep.valid()) fail(ErrorKind::InvalidLift, rep.summary());
    auto& p = data.points;
    std::vector<Breakpoint> kept;
    kept.reserve(p.size());
    kept.push_back(p[0]);
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Breakpoint& b = p[i];
        if (b.yl == b.yr) {
            const Breakpoint& a = kept.back();
            Rat bx = next_x(p, i), by = next_yl(p, i);
            if (collinear(a.x, a.yr, b.x, b.yl, bx, by)) continue;
        }
        kept.push_back(b);
    }
    return PLLift(std::move(kept), data.strict);
}

PLLift PLLift::identity() { return PLLift({{Rat(0), Rat(0), Rat(0)}}, true); }

PLLift PLLift::translation(const Rat& a) { return PLLift({{Rat(0), a, a}}, true); }

PLLift PLLift::constant(const Rat& x0) {
    return PLLift({{Rat(0), Rat(x0 - 1), x0}}, false);
}

Rat PLLift::operator()(const Rat& x) const {
    Int k = floor_rat(x);
    Rat t = x - Rat(k);
    std::size_t i = segment_index(points_, t);
    const Breakpoint& b = points_[i];
    Rat v;
    if (t == b.x) {
        v = b.yr;
    } else {
        Rat x1 = next_x(points_, i), y1 = next_yl(points_, i);
        v = b.yr + (y1 - b.yr) * (t - b.x) / (x1 - b.x);
    }
    return v + Rat(k);
}

Rat PLLift::left_limit(const Rat& x) const {
    Int k = floor_rat(x);
    Rat t = x - Rat(k);
    if (t == 0) return points_[0].yl + Rat(k);
    std::size_t i = segment_index(points_, t);
    const Breakpoint& b = points_[i];
    if (t == b.x) return b.yl + Rat(k);
    Rat x1 = next_x(points_, i), y1 = next_yl(points_, i);
    return b.yr + (y1 - b.yr) * (t - b.x) / (x1 - b.x) + Rat(k);
}

PLLift PLLift::shifted(const Int& k) const {
    std::vector<Breakpoint> pts = points_;
    for (auto& b : pts) {
        b.yl += Rat(k);
        b.yr += Rat(k);
    }
    return PLLift(std::move(pts), strict_);
}

PLLift PLLift::as_nondecreasing() const { return PLLift(points_, false); }

bool PLLift::has_jumps() const {
    for (const auto& b : points_)
        if (b.yl != b.yr) return true;
    return false;
}

bool PLLift::has_flats() const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (next_yl(points_, i) == points_[i].yr) return true;
    return false;
}

Rat eval_lift(const PLLift& f, const Rat& x) { return f(x); }

PLLift rebuild_pl(const std::vector<Rat>& xs, const std::function<Rat(const Rat&)>& eval,
                  bool strict) {
    std::vector<Breakpoint> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        pts[i].x = xs[i];
        pts[i].yr = eval(xs[i]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rat x1 = i + 1 < xs.size() ? xs[i + 1] : Rat(1);
        Rat mid = (xs[i] + x1) / 2;
        Rat v = eval(mid);
        Rat slope = (v - pts[i].yr) / (mid - xs[i]);
        Rat y_end = pts[i].yr + slope * (x1 - xs[i]);
        if (i + 1 < xs.size())
            pts[i + 1].yl = y_end;
        else
            pts[0].yl = y_end - 1;
    }
    return PLLift::make({std::move(pts), strict});
}

PLLift compose_lifts(const PLLift& f, const PLLift& g) {
    std::set<Rat> xs;
    const auto& gp = g.points();
    for (const auto& b : gp) xs.insert(b.x);
    // Preimages under g of f's breakpoint levels (all integer translates that
    // a segment's value range touches).
    for (std::size_t j = 0; j < gp.size(); ++j) {
        Rat x0 = gp[j].x, x1 = next_x(gp, j);
        Rat v0 = gp[j].yr, v1 = next_yl(gp, j);
        if (v0 == v1) continue;  // flat: no crossings inside
        Rat slope = (v1 - v0) / (x1 - x0);
        for (const auto& fb : f.points()) {
            for (Int k = ceil_rat(v0 - fb.x); k <= floor_rat(v1 - fb.x); ++k) {
                Rat level = fb.x + Rat(k);
                if (level <= v0 || level >= v1) continue;
                Rat x = x0 + (level - v0) / slope;
                if (x > x0 && x < x1) xs.insert(x);
            }
        }
    }
    std::vector<Rat> candidates(xs.begin(), xs.end());
    return rebuild_pl(
        candidates, [&](const Rat& x) { return f(g(x)); }, f.strict() && g.strict());
}

PLLift invert_lift(const PLLift& f) {
    if (!f.strict()) fail(ErrorKind::NonInvertible, "only strict lifts are invertible");
    const auto& pts = f.points();
    std::set<Rat> xs;
    xs.insert(Rat(0));
    for (const auto& b : pts) xs.insert(frac_rat(b.yr));
    Rat c = pts[0].yr;  // f(0)
    auto inv = [&](const Rat& y) -> Rat {
        Int m = floor_rat(y - c);
        Rat yy = y - Rat(m);  // in [c, c+1)
        // largest i with node value <= yy
        std::size_t lo = 0, hi = pts.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (pts[mid].yr <= yy)
                lo = mid;
            else
                hi = mid;
        }
        if (yy == pts[lo].yr) return pts[lo].x + Rat(m);
        Rat x1 = next_x(pts, lo), y1 = next_yl(pts, lo);
        Rat z = pts[lo].x + (yy - pts[lo].yr) * (x1 - pts[lo].x) / (y1 - pts[lo].yr);
        return z + Rat(m);
    };
    std::vector<Rat> candidates(xs.begin(), xs.end());
    return rebuild_pl(candidates, inv, true);
}

PLLift pointwise_max(const std::vector<PLLift>& fs) {
    if (fs.empty()) fail(ErrorKind::DimensionMismatch, "pointwise_max of empty family");
    if (fs.size() == 1) return fs[0];
    std::set<Rat> base;
    for (const auto& f : fs)
        for (const auto& b : f.points()) base.insert(b.x);
    std::vector<Rat> grid(base.begin(), base.end());
    std::set<Rat> xs(base);
    // Pairwise crossings inside each grid interval, where every map is linear.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Rat a = grid[i];
        Rat b = i + 1 < grid.size() ? grid[i + 1] : Rat(1);
        Rat mid = (a + b) / 2;
        std::vector<Rat> va(fs.size()), slope(fs.size());
        for (std::size_t k = 0; k < fs.size(); ++k) {
            va[k] = fs[k](a);
            slope[k] = (fs[k](mid) - va[k]) / (mid - a);
        }
        for (std::size_t k = 0; k < fs.size(); ++k)
            for (std::size_t l = k + 1; l < fs.size(); ++l) {
                if (slope[k] == slope[l]) continue;
                Rat t = a + (va[l] - va[k]) / (slope[k] - slope[l]);
                if (t > a && t < b) xs.insert(t);
            }
    }
    bool strict = true;
    for (const auto& f : fs) strict = strict && f.strict();
    std::vector<Rat> candidates(xs.begin(), xs.end());
    return rebuild_pl(
        candidates,
        [&](const Rat& x) {
            Rat m = fs[0](x);
            for (std::size_t k = 1; k < fs.size(); ++k) m = std::max(m, fs[k](x));
            return m;
        },
        strict);
}

}  // namespace eulerlab
