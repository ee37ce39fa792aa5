#pragma once

#include <hplane/points.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hplane {

/// Points of a set bucketed by a real-plane key (their real or imaginary
/// part). Group ids index both vectors; members hold point indices.
struct GroupIndex {
    std::vector<RealPoint> keys;
    std::vector<std::vector<std::uint32_t>> members;

    std::size_t group_count() const noexcept { return keys.size(); }

    std::size_t max_group_size() const noexcept {
        std::size_t best = 0;
        for (const auto& m : members) {
            if (m.size() > best) best = m.size();
        }
        return best;
    }
};

template <class P, class KeyFn>
GroupIndex group_points(const PointSet<P>& ps, KeyFn key) {
    GroupIndex out;
    std::unordered_map<RealPoint, std::uint32_t> ids;
    ids.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        RealPoint k = key(ps[i]);
        auto [it, inserted] = ids.try_emplace(std::move(k), static_cast<std::uint32_t>(out.keys.size()));
        if (inserted) {
            out.keys.push_back(key(ps[i]));
            out.members.emplace_back();
        }
        out.members[it->second].push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

template <class P>
GroupIndex group_by_real_part(const PointSet<P>& ps) {
    return group_points(ps, [](const P& p) { return real_part(p); });
}

template <class P>
GroupIndex group_by_imaginary_part(const PointSet<P>& ps) {
    return group_points(ps, [](const P& p) { return imaginary_part(p); });
}

}  // namespace hplane
