#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

struct InvalidAreaSequence : std::invalid_argument {
    explicit InvalidAreaSequence(const std::string& what) : std::invalid_argument(what) {}
};

struct HeightExceeded : std::invalid_argument {
    HeightExceeded() : std::invalid_argument("path height exceeds g+1") {}
};

/// A Dyck path: word over {U, D} with every prefix having #U >= #D and
/// equal totals.  Immutable.
class DyckPath {
public:
    DyckPath() = default;

    explicit DyckPath(std::vector<bool> ups) : steps_(std::move(ups)) { validate(); }

    explicit DyckPath(const std::string& word) {
        steps_.reserve(word.size());
        for (char ch : word) {
            if (ch == 'U' || ch == 'u') steps_.push_back(true);
            else if (ch == 'D' || ch == 'd') steps_.push_back(false);
            else throw std::invalid_argument("step word must consist of U and D");
        }
        validate();
    }

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    int num_steps() const { return static_cast<int>(steps_.size()); }
    bool is_up(int pos) const { return steps_[static_cast<std::size_t>(pos)]; }
    const std::vector<bool>& steps() const { return steps_; }

    /// Height of the path after `pos` steps.
    int level(int pos) const {
        int h = 0;
        for (int s = 0; s < pos; ++s) h += is_up(s) ? 1 : -1;
        return h;
    }

    std::vector<int> levels() const {
        std::vector<int> h(steps_.size() + 1, 0);
        for (std::size_t s = 0; s < steps_.size(); ++s)
            h[s + 1] = h[s] + (steps_[s] ? 1 : -1);
        return h;
    }

    std::string word() const {
        std::string w;
        w.reserve(steps_.size());
        for (bool u : steps_) w.push_back(u ? 'U' : 'D');
        return w;
    }

    bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
    bool operator!=(const DyckPath& o) const { return !(*this == o); }
    bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

private:
    void validate() const {
        int h = 0;
        for (bool u : steps_) {
            h += u ? 1 : -1;
            if (h < 0) throw std::invalid_argument("path dips below the x-axis");
        }
        if (h != 0) throw std::invalid_argument("path does not end on the x-axis");
    }

    std::vector<bool> steps_;
};

inline int height(const DyckPath& d) {
    int h = 0, best = 0;
    for (bool u : d.steps()) {
        h += u ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

/// Area sequence [c_0,...,c_n]: c_k is the number of lattice points on
/// the diagonal from (2k,0) in direction (1,1) between the x-axis and
/// the path, i.e. the largest c with c-1 <= level(2k + c-1).
inline std::vector<int> area_sequence(const DyckPath& d) {
    std::vector<int> h = d.levels();
    int n = d.semilength();
    std::vector<int> area(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        int t = 0;
        while (2 * k + t + 1 <= 2 * n && t + 1 <= h[static_cast<std::size_t>(2 * k + t + 1)])
            ++t;
        area[static_cast<std::size_t>(k)] = t + 1;
    }
    return area;
}

inline bool is_valid_area_sequence(const std::vector<int>& a) {
    if (a.empty() || a.back() != 1) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < 2 || a[i + 1] + 1 < a[i]) return false;
    return true;
}

/// Inverse of area_sequence.  The point (2k + c_k - 1, c_k - 1) is the
/// topmost path point on diagonal k, and maximality forces a single down
/// step right after it; the path is U^{c_0-1} followed by
/// D U^{c_{k+1}-c_k+1} for k = 0..n-1.
inline DyckPath from_area(const std::vector<int>& a) {
    if (!is_valid_area_sequence(a))
        throw InvalidAreaSequence("not a valid area sequence");
    std::vector<bool> steps;
    int n = static_cast<int>(a.size()) - 1;
    steps.reserve(static_cast<std::size_t>(2 * n));
    for (int t = 1; t < a[0]; ++t) steps.push_back(true);
    for (int k = 0; k < n; ++k) {
        steps.push_back(false);
        int ups = a[static_cast<std::size_t>(k + 1)] - a[static_cast<std::size_t>(k)] + 1;
        for (int t = 0; t < ups; ++t) steps.push_back(true);
    }
    return DyckPath(std::move(steps));
}

struct BouncePath {
    std::vector<int> bounce_points; // b_1 < ... < b_d = n (excluding b_0 = 0)
    int count = 0;                  // d
};

/// Bounce recurrence b_0 = 0, b_{t+1} = b_t + c_{b_t} - 1 on the area
/// sequence, until b_d = n.
inline BouncePath bounce(const DyckPath& d) {
    std::vector<int> area = area_sequence(d);
    int n = d.semilength();
    BouncePath bp;
    int b = 0;
    while (b < n) {
        b += area[static_cast<std::size_t>(b)] - 1;
        bp.bounce_points.push_back(b);
        ++bp.count;
    }
    return bp;
}

/// Heights of the bounce path at every x position, for the
/// bounce-below-path property check.
inline std::vector<int> bounce_levels(const DyckPath& d) {
    std::vector<int> area = area_sequence(d);
    int n = d.semilength();
    std::vector<int> h;
    h.push_back(0);
    int b = 0;
    while (b < n) {
        int rise = area[static_cast<std::size_t>(b)] - 1;
        for (int t = 1; t <= rise; ++t) h.push_back(t);
        for (int t = rise - 1; t >= 0; --t) h.push_back(t);
        b += rise;
    }
    return h;
}

/// Unique factorization into prime paths (paths touching the axis only
/// at their endpoints).
inline std::vector<DyckPath> prime_factors(const DyckPath& d) {
    std::vector<DyckPath> out;
    std::vector<bool> cur;
    int h = 0;
    for (bool u : d.steps()) {
        cur.push_back(u);
        h += u ? 1 : -1;
        if (h == 0) {
            out.emplace_back(std::move(cur));
            cur.clear();
        }
    }
    return out;
}

inline DyckPath concat(const std::vector<DyckPath>& parts) {
    std::vector<bool> steps;
    for (const auto& p : parts)
        steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    return DyckPath(std::move(steps));
}

/// Drop the first up and last down step of a prime path.
inline DyckPath strip_prime(const DyckPath& p) {
    if (p.num_steps() < 2) throw std::invalid_argument("cannot strip the empty path");
    std::vector<bool> steps(p.steps().begin() + 1, p.steps().end() - 1);
    return DyckPath(std::move(steps));
}

struct DyckDecomposition {
    int m = 0;
    std::vector<DyckPath> left;  // heights <= floor(g/2)
    std::vector<DyckPath> right; // heights <= ceil(g/2)
    DyckPath middle;             // height <= ceil(g/2), = ceil(g/2) when m > 0
};

namespace detail {

inline DyckPath reverse_word(const std::vector<bool>& steps) {
    std::vector<bool> rev(steps.rbegin(), steps.rend());
    return DyckPath(std::move(rev));
}

// Split a word at the first peak of height `h`: a position at height h
// followed by a down step, or the end of the word.
inline std::size_t first_peak_prefix(const std::vector<bool>& steps, int h) {
    int level = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        if (level == h && !steps[s]) return s;
        level += steps[s] ? 1 : -1;
    }
    return steps.size();
}

} // namespace detail

/// Bounded-height decomposition: remove the steps crossing between
/// heights ceil(g/2) and ceil(g/2)+1.  The segments above the cut become
/// L_1..L_m; the inner segments below it, reversed, become R_2..R_m; the
/// initial segment splits at its first peak of height ceil(g/2) into P
/// and (reversed) R_1, and M is P followed by the reversed final segment.
inline DyckDecomposition decompose_bounded(const DyckPath& d, int g) {
    if (height(d) > g + 1) throw HeightExceeded();
    const int hcut = (g + 1) / 2; // ceil(g/2)

    DyckDecomposition out;
    if (height(d) <= hcut) {
        out.middle = d;
        return out;
    }

    // Segments between crossings of the line y = hcut + 1/2.  Even
    // segments lie below, odd segments above.
    std::vector<std::vector<bool>> segments(1);
    int level = 0;
    for (bool u : d.steps()) {
        bool crossing = (u && level == hcut) || (!u && level == hcut + 1);
        if (crossing) segments.emplace_back();
        else segments.back().push_back(u);
        level += u ? 1 : -1;
    }
    out.m = static_cast<int>(segments.size()) / 2;

    for (int k = 1; k <= out.m; ++k)
        out.left.emplace_back(segments[static_cast<std::size_t>(2 * k - 1)]);

    std::vector<bool>& a = segments.front();
    std::size_t split = detail::first_peak_prefix(a, hcut);
    std::vector<bool> p(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<bool> r1(a.begin() + static_cast<std::ptrdiff_t>(split), a.end());
    out.right.push_back(detail::reverse_word(r1));
    for (int k = 2; k <= out.m; ++k)
        out.right.push_back(detail::reverse_word(segments[static_cast<std::size_t>(2 * (k - 1))]));

    const std::vector<bool>& b = segments.back();
    std::vector<bool> middle = p;
    middle.insert(middle.end(), b.rbegin(), b.rend());
    out.middle = DyckPath(std::move(middle));
    return out;
}

inline DyckPath recompose_bounded(const DyckDecomposition& dec, int g) {
    if (dec.m == 0) return dec.middle;
    const int hcut = (g + 1) / 2;

    // Recover P and B from M: P ends at the first peak of height hcut.
    const std::vector<bool>& mw = dec.middle.steps();
    std::size_t split = detail::first_peak_prefix(mw, hcut);
    std::vector<bool> steps(mw.begin(), mw.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<bool> b(mw.rbegin(),
                        mw.rbegin() + static_cast<std::ptrdiff_t>(mw.size() - split));

    for (int k = 1; k <= dec.m; ++k) {
        const auto& r = dec.right[static_cast<std::size_t>(k - 1)].steps();
        steps.insert(steps.end(), r.rbegin(), r.rend());
        steps.push_back(true); // removed up crossing
        const auto& l = dec.left[static_cast<std::size_t>(k - 1)].steps();
        steps.insert(steps.end(), l.begin(), l.end());
        steps.push_back(false); // removed down crossing
    }
    steps.insert(steps.end(), b.begin(), b.end());
    return DyckPath(std::move(steps));
}

} // namespace nakayama
