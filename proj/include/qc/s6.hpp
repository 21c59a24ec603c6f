#pragma once

#include "qc/cyclotomic.hpp"
#include "qc/rational.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

/// Element of S6 as the image vector of {0..5}.
struct Perm {
    std::array<int, 6> img{0, 1, 2, 3, 4, 5};

    static Perm identity() { return Perm{}; }
    static Perm transposition(int a, int b) {
        Perm g;
        std::swap(g.img[static_cast<size_t>(a)], g.img[static_cast<size_t>(b)]);
        return g;
    }

    int operator()(int i) const { return img[static_cast<size_t>(i)]; }
    bool is_identity() const { return *this == identity(); }

    Perm inverse() const {
        Perm r;
        for (int i = 0; i < 6; ++i) r.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
        return r;
    }

    int fixed_points() const {
        int n = 0;
        for (int i = 0; i < 6; ++i) n += img[static_cast<size_t>(i)] == i;
        return n;
    }

    /// Cycle type as a partition of 6, parts descending.
    std::vector<int> cycle_type() const {
        std::vector<int> parts;
        std::array<bool, 6> seen{};
        for (int i = 0; i < 6; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0, j = i;
            do {
                seen[static_cast<size_t>(j)] = true;
                j = img[static_cast<size_t>(j)];
                ++len;
            } while (j != i);
            parts.push_back(len);
        }
        std::sort(parts.rbegin(), parts.rend());
        return parts;
    }

    /// Cycle notation with fixed points omitted, e.g. "(0 1)(2 3 4)"; "()" for id.
    std::string to_cycles() const {
        std::string s;
        std::array<bool, 6> seen{};
        for (int i = 0; i < 6; ++i) {
            if (seen[static_cast<size_t>(i)] || img[static_cast<size_t>(i)] == i) continue;
            s += "(";
            int j = i;
            bool first = true;
            do {
                seen[static_cast<size_t>(j)] = true;
                if (!first) s += " ";
                s += std::to_string(j);
                j = img[static_cast<size_t>(j)];
                first = false;
            } while (j != i);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

/// (a o b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    for (int i = 0; i < 6; ++i) r.img[static_cast<size_t>(i)] = a(b(i));
    return r;
}

/// All 720 elements in lexicographic image order.
inline const std::vector<Perm>& all_perms() {
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> v;
        Perm g;
        do v.push_back(g);
        while (std::next_permutation(g.img.begin(), g.img.end()));
        return v;
    }();
    return perms;
}

inline size_t perm_index(const Perm& g) {
    const auto& perms = all_perms();
    auto it = std::lower_bound(perms.begin(), perms.end(), g);
    assert(it != perms.end() && *it == g);
    return static_cast<size_t>(it - perms.begin());
}

/// Character of the standard 5-dimensional representation V (the hyperplane
/// sum(x_i) = 0 inside the permutation representation).
inline int standard_character(const Perm& g) { return g.fixed_points() - 1; }

struct ClassData {
    Perm representative;
    std::vector<int> cycle_type;
    int size = 0;
};

inline std::string cycle_type_string(const std::vector<int>& parts) {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

/// The 11 conjugacy classes of S6, ordered by ascending cycle type
/// (identity class first, the 6-cycles last).
inline const std::vector<ClassData>& conjugacy_classes() {
    static const std::vector<ClassData> classes = [] {
        std::map<std::vector<int>, ClassData> by_type;
        for (const Perm& g : all_perms()) {
            std::vector<int> t = g.cycle_type();
            auto [it, inserted] = by_type.try_emplace(t);
            if (inserted) {
                it->second.representative = g;
                it->second.cycle_type = t;
            }
            ++it->second.size;
        }
        std::vector<ClassData> v;
        for (auto& [t, cd] : by_type) v.push_back(cd);
        return v;
    }();
    return classes;
}

inline size_t class_index(const Perm& g) {
    std::vector<int> t = g.cycle_type();
    const auto& classes = conjugacy_classes();
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].cycle_type == t) return i;
    throw std::logic_error("class_index: unreachable");
}

/// Values of the standard character on the class list.
inline std::vector<Rat> standard_character_values() {
    std::vector<Rat> v;
    for (const ClassData& c : conjugacy_classes()) v.push_back(Rat(standard_character(c.representative)));
    return v;
}

inline std::vector<Rat> trivial_character_values() {
    return std::vector<Rat>(conjugacy_classes().size(), Rat(1));
}

/// <chi1, chi2> = (1/720) sum over classes of size * chi1 * chi2. The
/// characters here are rational-valued, so no conjugation is applied.
inline Rat char_inner_product(const std::vector<Rat>& chi1, const std::vector<Rat>& chi2) {
    const auto& classes = conjugacy_classes();
    if (chi1.size() != classes.size() || chi2.size() != classes.size())
        throw std::invalid_argument("char_inner_product: need one value per class");
    Rat sum;
    for (size_t i = 0; i < classes.size(); ++i)
        sum += Rat(classes[i].size) * chi1[i] * chi2[i];
    return sum / Rat(static_cast<long long>(all_perms().size()));
}

/// True iff chi(g) = dim only at the identity (the module is faithful).
inline bool character_faithful(const std::function<int(const Perm&)>& chi, int dim) {
    for (const Perm& g : all_perms())
        if (!g.is_identity() && chi(g) == dim) return false;
    return true;
}

/// Faithfulness of S6 on V.
inline bool faithfulness_check() {
    return character_faithful([](const Perm& g) { return standard_character(g); }, 5);
}

/// Projective point in P(C^6) with coordinates in Q(w), stored canonically:
/// scaled so the first nonzero coordinate is 1.
class ProjPoint {
public:
    explicit ProjPoint(std::array<Cyc, 6> coords) : c_(std::move(coords)) {
        size_t k = 0;
        while (k < 6 && c_[k].is_zero()) ++k;
        if (k == 6) throw std::invalid_argument("ProjPoint: zero vector");
        Cyc inv = c_[k].inverse();
        for (auto& x : c_) x *= inv;
    }

    const std::array<Cyc, 6>& coords() const { return c_; }
    const Cyc& operator[](size_t i) const { return c_[i]; }

    Cyc coord_sum() const {
        Cyc s;
        for (const auto& x : c_) s += x;
        return s;
    }

    /// g . p places coordinate i at position g(i); matches the variable action.
    ProjPoint apply(const Perm& g) const {
        std::array<Cyc, 6> out;
        for (int i = 0; i < 6; ++i) out[static_cast<size_t>(g(i))] = c_[static_cast<size_t>(i)];
        return ProjPoint(std::move(out));
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.c_ == q.c_; }
    friend bool operator<(const ProjPoint& p, const ProjPoint& q) {
        for (size_t i = 0; i < 6; ++i) {
            if (p.c_[i] != q.c_[i]) return p.c_[i] < q.c_[i];
        }
        return false;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < 6; ++i) {
            if (i) s += ", ";
            s += c_[i].to_string();
        }
        return s + ")";
    }

private:
    std::array<Cyc, 6> c_;
};

/// S6-orbit of a point with projective dedup; sorted canonically.
inline std::vector<ProjPoint> orbit(const ProjPoint& seed) {
    std::set<ProjPoint> seen;
    for (const Perm& g : all_perms()) seen.insert(seed.apply(g));
    return std::vector<ProjPoint>(seen.begin(), seen.end());
}

/// Orbit size when points are deduplicated as raw coordinate vectors,
/// without projective rescaling.
inline size_t raw_orbit_size(const std::array<Cyc, 6>& seed) {
    std::set<std::array<Cyc, 6>> seen;
    for (const Perm& g : all_perms()) {
        std::array<Cyc, 6> out;
        for (int i = 0; i < 6; ++i) out[static_cast<size_t>(g(i))] = seed[static_cast<size_t>(i)];
        seen.insert(out);
    }
    return seen.size();
}

struct NormalSubgroup {
    int order = 0;
    std::vector<size_t> class_indices;
    std::string description;
};

namespace detail {

inline std::vector<NormalSubgroup> compute_normal_subgroups() {
    const auto& perms = all_perms();
    const auto& classes = conjugacy_classes();
    const size_t n_classes = classes.size();
    const size_t group_order = perms.size();

    std::vector<size_t> class_of(group_order);
    for (size_t i = 0; i < group_order; ++i) class_of[i] = class_index(perms[i]);

    std::vector<NormalSubgroup> result;
    for (uint32_t mask = 0; mask < (1u << (n_classes - 1)); ++mask) {
        std::vector<size_t> chosen{0};  // identity class is always in
        int order = classes[0].size;
        for (size_t c = 1; c < n_classes; ++c)
            if (mask & (1u << (c - 1))) {
                chosen.push_back(c);
                order += classes[c].size;
            }
        if (group_order % static_cast<size_t>(order) != 0) continue;  // Lagrange

        std::vector<char> member(group_order, 0);
        std::vector<size_t> elements;
        for (size_t i = 0; i < group_order; ++i)
            if (std::find(chosen.begin(), chosen.end(), class_of[i]) != chosen.end()) {
                member[i] = 1;
                elements.push_back(i);
            }
        bool closed = true;
        for (size_t a : elements) {
            for (size_t b : elements) {
                if (!member[perm_index(compose(perms[a], perms[b]))]) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (!closed) continue;

        NormalSubgroup ns;
        ns.order = order;
        ns.class_indices = chosen;
        for (size_t c : chosen) {
            if (!ns.description.empty()) ns.description += " + ";
            ns.description += cycle_type_string(classes[c].cycle_type);
        }
        result.push_back(std::move(ns));
    }
    std::sort(result.begin(), result.end(),
              [](const NormalSubgroup& a, const NormalSubgroup& b) { return a.order < b.order; });
    return result;
}

}  // namespace detail

/// All normal subgroups, found by brute force: a union of conjugacy classes
/// containing the identity class is a subgroup iff it is closed under
/// composition. Sorted by order.
inline const std::vector<NormalSubgroup>& normal_subgroups() {
    static const std::vector<NormalSubgroup> cached = detail::compute_normal_subgroups();
    return cached;
}

struct TransitiveActionExclusion {
    int p = 0;
    bool excluded = false;
    std::vector<std::string> trace;
};

/// Mechanical refutation of a transitive S6-action on p points, 3 <= p <= 5:
/// the image of S6 -> S_p has order 720, 2 or 1 (kernel is normal), 720 does
/// not divide p!, and an image of order <= 2 has orbits of size <= 2 < p.
inline TransitiveActionExclusion no_transitive_action_on(int p) {
    if (p < 3 || p > 5) throw std::invalid_argument("no_transitive_action_on: p must be in 3..5");
    TransitiveActionExclusion out;
    out.p = p;
    out.trace.push_back("an action of S6 on " + std::to_string(p) +
                        " points is a homomorphism S6 -> S" + std::to_string(p));
    std::vector<int> orders;
    for (const NormalSubgroup& ns : normal_subgroups()) orders.push_back(ns.order);
    std::string olist;
    for (size_t i = 0; i < orders.size(); ++i) olist += (i ? ", " : "") + std::to_string(orders[i]);
    out.trace.push_back("its kernel is a normal subgroup; enumerated normal subgroup orders: {" +
                        olist + "}");
    long long pfact = 1;
    for (int i = 2; i <= p; ++i) pfact *= i;
    bool all_refuted = true;
    for (int k : orders) {
        int image = 720 / k;
        if (image == 1) {
            out.trace.push_back("image of order 1: trivial action, not transitive");
        } else if (image <= 2) {
            out.trace.push_back("image of order " + std::to_string(image) +
                                ": orbits have size <= 2 < " + std::to_string(p));
        } else if (pfact % image != 0) {
            out.trace.push_back("image of order " + std::to_string(image) + ": does not divide " +
                                std::to_string(p) + "! = " + std::to_string(pfact) +
                                ", impossible inside S" + std::to_string(p));
        } else {
            out.trace.push_back("image of order " + std::to_string(image) + ": not refuted");
            all_refuted = false;
        }
    }
    out.excluded = all_refuted;
    out.trace.push_back(all_refuted
                            ? "no transitive action on " + std::to_string(p) + " points"
                            : "transitive action on " + std::to_string(p) + " points not excluded");
    return out;
}

}  // namespace qc
