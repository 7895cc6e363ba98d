#pragma once

#include "zdlat/ideal.hpp"
#include "zdlat/lattice.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdlat {

/// The nine-element distributive lattice used throughout the worked
/// examples (the product of two 3-chains). Chains 0<c<a<z<1 and 0<x<b<d<1,
/// with y above c and x and below z and d.
extern const std::string_view kFigure1Text;

struct Fixture {
    std::string name;
    Lattice lattice;
    std::vector<std::pair<std::string, IdealSet>> distinguished_ideals;

    const IdealSet& ideal(std::string_view name) const;
};

Lattice figure1_lattice();

/// Finite truncation of the non-distributive inclusion lattice
/// {emptyset, {3}, {1}, {1,2}} u {{4..k} : 4 <= k <= n} u {{1..n}}.
/// Labels: 0, S3, S1, S12, S4, S4-5, ..., S4-n, S1-n. Throws
/// PreconditionError for n < 6.
LatticeSpec example_1_7_spec(std::size_t n);
Lattice fixture_example_1_7(std::size_t n = 6);
/// The chain {emptyset} u {{4..k}} of the truncation.
IdealSet example_1_7_chain_ideal(const Lattice& l);

/// The nine-element lattice with ideals "zero" = {0} and "z" = (z]; the
/// truncated inclusion lattice at n = 6 with ideal "chain".
std::vector<Fixture> paper_fixtures();

} // namespace zdlat
