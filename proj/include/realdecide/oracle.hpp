#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/rational.hpp"
#include "realdecide/signdet.hpp"
#include "realdecide/sturm.hpp"
#include "realdecide/system.hpp"
#include "realdecide/unipoly.hpp"

namespace realdecide {

// Brute-force enumeration of realized sign assignments: isolate every root
// of the product, then read signs off sample points — inside each isolating
// interval, between consecutive intervals, and beyond both extremes. Signs
// are constant between roots, so this is complete.
inline std::vector<SignAssignment> enumerate_assignments_by_isolation(
    const std::vector<UniPoly>& fs) {
    for (const auto& f : fs)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in family");

    UniPoly product = UniPoly::constant(Rational(1));
    bool any_nonconstant = false;
    for (const auto& f : fs) {
        if (f.is_constant()) continue;
        product = product * squarefree_part(f);
        any_nonconstant = true;
    }

    auto signs_at = [&](const Rational& x) {
        std::string s;
        for (const auto& f : fs) {
            int v = sign(f.evaluate(x));
            s += v > 0 ? '>' : (v < 0 ? '<' : '=');
        }
        return s;
    };

    std::set<std::string> seen;
    if (!any_nonconstant) {
        seen.insert(signs_at(Rational(0)));
    } else {
        std::vector<RootInterval> roots = isolate_roots(product);
        if (roots.empty()) {
            seen.insert(signs_at(Rational(0)));
        } else {
            // Sample points strictly between roots and beyond the extremes.
            // All are non-roots of the product (shared interval endpoints
            // are non-root cut points).
            seen.insert(signs_at(roots.front().lo - 1));
            for (std::size_t j = 0; j + 1 < roots.size(); ++j)
                seen.insert(signs_at((roots[j].hi + roots[j + 1].lo) / 2));
            seen.insert(signs_at(roots.back().hi + 1));

            // At the root inside each interval: a polynomial vanishes there
            // iff it has a root in the interval (its roots are product
            // roots, and the interval holds exactly one of those);
            // otherwise its sign is constant across the interval.
            for (const auto& iv : roots) {
                std::string s;
                for (const auto& f : fs) {
                    if (!f.is_constant() &&
                        count_roots(f, ExtendedPoint::finite(iv.lo),
                                    ExtendedPoint::finite(iv.hi)) > 0) {
                        s += '=';
                        continue;
                    }
                    int v = sign(f.evaluate(iv.lo));
                    s += v > 0 ? '>' : '<';
                }
                seen.insert(std::move(s));
            }
        }
    }

    std::vector<SignAssignment> out;
    for (auto& s : seen) out.push_back({s});
    return out;
}

struct Box {
    std::vector<std::pair<Rational, Rational>> ranges;  // per-variable [lo, hi]
};

struct SampleReport {
    enum class Status { WitnessFound, NoWitnessInBox };

    Status status = Status::NoWitnessInBox;
    std::optional<std::vector<Rational>> witness;
    Box box;
    Rational resolution;
};

// Exhaustive exact evaluation over a rational grid. Finding a witness is
// conclusive for consistency; not finding one proves nothing.
inline SampleReport sample_consistency(const SignSystem& sys, const Box& box,
                                       const Rational& resolution) {
    sys.validate();
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    if (box.ranges.size() != sys.arity)
        throw std::invalid_argument("box arity mismatch");

    SampleReport report;
    report.box = box;
    report.resolution = resolution;

    std::vector<Rational> point(sys.arity);
    for (std::size_t i = 0; i < sys.arity; ++i) point[i] = box.ranges[i].first;

    auto in_range = [&](std::size_t i) { return point[i] <= box.ranges[i].second; };
    for (std::size_t i = 0; i < sys.arity; ++i)
        if (!in_range(i)) return report;  // degenerate box: empty grid

    while (true) {
        bool ok = true;
        for (std::size_t c = 0; c < sys.polys.size() && ok; ++c) {
            int s = sign(sys.polys[c].evaluate(point));
            ok = relation_accepts(sys.relations[c], s > 0 ? '>' : (s < 0 ? '<' : '='));
        }
        if (ok) {
            report.status = SampleReport::Status::WitnessFound;
            report.witness = point;
            return report;
        }
        // odometer increment, last variable fastest
        std::size_t i = sys.arity;
        while (i-- > 0) {
            point[i] += resolution;
            if (in_range(i)) break;
            point[i] = box.ranges[i].first;
            if (i == 0) return report;
        }
    }
}

}  // namespace realdecide
