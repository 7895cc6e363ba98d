#pragma once

#include "oracles.hpp"

#include "zdlat/census.hpp"
#include "zdlat/graph.hpp"
#include "zdlat/lattice.hpp"

#include <string>
#include <vector>

namespace testing {

inline oracle::Graph to_oracle(const zdlat::SimpleGraph& g)
{
    oracle::Graph out(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v)
        out[v] = static_cast<oracle::Mask>(g.neighbours(v).bits());
    return out;
}

inline zdlat::SimpleGraph from_oracle(const oracle::Graph& g)
{
    zdlat::SimpleGraph out(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g[u] >> v & 1)
                out.add_edge(u, v);
    return out;
}

inline oracle::Order to_oracle(const zdlat::Lattice& l)
{
    oracle::Order leq(l.size(), 0);
    for (zdlat::Element a = 0; a < l.size(); ++a)
        leq[a] = static_cast<oracle::Mask>(l.upper_set(a).bits());
    return leq;
}

inline std::string data_path(const std::string& name) { return std::string(ZDLAT_DATA_DIR) + "/" + name; }

/// Census lattices up to `max_size`, computed once per process.
inline const std::vector<zdlat::CensusLattice>& census(std::size_t max_size)
{
    static const std::vector<zdlat::CensusLattice> all = zdlat::enumerate_lattices(7);
    static std::vector<std::vector<zdlat::CensusLattice>> by_bound(8);
    auto& slot = by_bound.at(max_size);
    if (slot.empty())
        for (const auto& c : all)
            if (c.lattice.size() <= max_size)
                slot.push_back(c);
    return slot;
}

inline std::vector<zdlat::IdealSet> proper_ideals(const zdlat::Lattice& l)
{
    std::vector<zdlat::IdealSet> out;
    for (auto& i : zdlat::enumerate_ideals(l))
        if (i.is_proper())
            out.push_back(i);
    return out;
}

} // namespace testing
