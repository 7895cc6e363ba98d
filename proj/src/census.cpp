#include "zdlat/census.hpp"

#include "zdlat/zdgraph.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace zdlat {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

/// Strict down-sets of a naturally labelled poset on 0..m-1 (i < j whenever
/// i is below j).
using Poset = std::vector<ElementSet>;

void grow_posets(std::size_t m, Poset& current, const std::function<void(const Poset&)>& emit)
{
    const std::size_t k = current.size();
    if (k == m) {
        emit(current);
        return;
    }
    // The new element k sits above exactly the members of a down-closed
    // subset of {0..k-1}.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        ElementSet below(bits);
        bool closed = true;
        below.for_each([&](Element j) { closed = closed && current[j].is_subset_of(below); });
        if (!closed)
            continue;
        current.push_back(below);
        grow_posets(m, current, emit);
        current.pop_back();
    }
}

/// Adjoins bottom and top to the inner poset and returns the spec when the
/// result is a lattice.
std::optional<LatticeSpec> bounded_lattice_spec(const Poset& inner)
{
    const std::size_t m = inner.size();
    const std::size_t n = m + 2;
    // down[x] includes x; 0 is bottom, n-1 is top, inner i is i+1.
    std::vector<ElementSet> down(n);
    down[0] = ElementSet::singleton(0);
    for (std::size_t i = 0; i < m; ++i) {
        ElementSet d = ElementSet{0, i + 1};
        inner[i].for_each([&](Element j) { d.insert(j + 1); });
        down[i + 1] = d;
    }
    down[n - 1] = ElementSet::universe(n);

    std::vector<ElementSet> up(n);
    for (std::size_t b = 0; b < n; ++b)
        down[b].for_each([&](Element a) { up[a].insert(b); });
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            ElementSet lower = down[a] & down[b];
            ElementSet upper = up[a] & up[b];
            bool has_meet = false, has_join = false;
            lower.for_each([&](Element c) { has_meet = has_meet || lower.is_subset_of(down[c]); });
            upper.for_each([&](Element c) { has_join = has_join || upper.is_subset_of(up[c]); });
            if (!has_meet || !has_join)
                return std::nullopt;
        }

    LatticeSpec spec;
    spec.element_labels.push_back("0");
    for (std::size_t i = 0; i < m; ++i)
        spec.element_labels.push_back(std::string(1, static_cast<char>('a' + i)));
    spec.element_labels.push_back("1");
    for (std::size_t b = 0; b < n; ++b) {
        ElementSet strict = down[b] - ElementSet::singleton(b);
        strict.for_each([&](Element a) {
            ElementSet between = (up[a] - ElementSet::singleton(a)) & strict;
            if (between.empty())
                spec.cover_pairs.emplace_back(spec.element_labels[a], spec.element_labels[b]);
        });
    }
    return spec;
}

} // namespace

std::vector<CensusLattice> enumerate_lattices(std::size_t max_size)
{
    if (max_size == 0 || max_size > kMaxCensusSize)
        throw PreconditionError("census size bound must be between 1 and " + std::to_string(kMaxCensusSize));
    std::vector<CensusLattice> out;
    out.push_back({"n1-1", build_lattice(LatticeSpec{{"0"}, {}})});

    for (std::size_t n = 2; n <= max_size; ++n) {
        std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> seen; // invariant vector -> index in out
        std::size_t k = 0;
        Poset current;
        grow_posets(n - 2, current, [&](const Poset& inner) {
            auto spec = bounded_lattice_spec(inner);
            if (!spec)
                return;
            Lattice l = build_lattice(*spec);
            auto inv = invariant_vector(l);
            for (const auto& [key, idx] : seen)
                if (key == inv && lattices_isomorphic(l, out[idx].lattice))
                    return;
            seen.emplace_back(std::move(inv), out.size());
            out.push_back({"n" + std::to_string(n) + "-" + std::to_string(++k), std::move(l)});
        });
    }
    return out;
}

const char* to_string(IdealFilter f)
{
    switch (f) {
    case IdealFilter::all:
        return "all";
    case IdealFilter::proper:
        return "proper";
    default:
        return "principal";
    }
}

std::optional<IdealFilter> parse_ideal_filter(std::string_view text)
{
    for (auto f : {IdealFilter::all, IdealFilter::proper, IdealFilter::principal})
        if (text == to_string(f))
            return f;
    return std::nullopt;
}

void CensusConfig::validate() const
{
    if (max_size < 1)
        throw PreconditionError("max_size must be at least 1");
    if (max_size > kMaxCensusSize)
        throw PreconditionError("max_size above " + std::to_string(kMaxCensusSize) + " is not supported");
    if (max_size == kMaxCensusSize && !allow_size_8)
        throw PreconditionError("size 8 needs an explicit opt-in");
    if (worker_count < 1)
        throw PreconditionError("worker_count must be at least 1");
    if (claims.empty())
        throw PreconditionError("no claims selected");
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct Instance {
    std::size_t lattice;
    IdealSet ideal;
};

struct InstanceResult {
    std::vector<ClaimReport> reports;
    std::optional<std::size_t> girth;
    bool core_or_pendant = false;
};

std::vector<IdealSet> ideals_for(const Lattice& l, IdealFilter filter)
{
    if (filter == IdealFilter::principal) {
        std::vector<IdealSet> out;
        for (Element a = 0; a < l.size(); ++a)
            out.push_back(make_ideal_set(l, l.principal_ideal(a)));
        return out;
    }
    auto all = enumerate_ideals(l);
    if (filter == IdealFilter::proper)
        std::erase_if(all, [](const IdealSet& i) { return !i.is_proper(); });
    return all;
}

InstanceResult evaluate(const Lattice& l, bool distributive, const IdealSet& ideal, const std::vector<ClaimId>& claims)
{
    InstanceResult out;
    for (ClaimId id : claims) {
        if (requires_distributive(id) && !distributive) {
            ClaimReport r{id};
            r.notes.emplace_back("lattice is not distributive");
            out.reports.push_back(std::move(r));
            continue;
        }
        out.reports.push_back(check_claim(id, l, ideal));
    }
    if (ideal.is_proper()) {
        ZdGraph g = build_gamma_I(l, ideal);
        GraphInvariants inv = invariants(g);
        out.girth = inv.girth;
        if (inv.has_cycle()) {
            out.core_or_pendant = true;
            for (std::size_t v = 0; v < g.order(); ++v)
                if (!inv.core_vertices.contains(v) && inv.degrees[v] != 1)
                    out.core_or_pendant = false;
        }
    }
    return out;
}

} // namespace

CensusSummary run_census(const CensusConfig& config)
{
    config.validate();
    const auto lattices = enumerate_lattices(config.max_size);

    CensusSummary summary;
    summary.max_size = config.max_size;
    summary.lattice_counts.assign(config.max_size, 0);
    summary.swept_counts.assign(config.max_size, 0);

    std::vector<bool> distributive(lattices.size());
    std::vector<Instance> instances;
    for (std::size_t i = 0; i < lattices.size(); ++i) {
        const Lattice& l = lattices[i].lattice;
        ++summary.lattice_counts[l.size() - 1];
        distributive[i] = is_distributive(l);
        if (config.distributive_only && !distributive[i])
            continue;
        ++summary.swept_counts[l.size() - 1];
        for (auto& ideal : ideals_for(l, config.ideal_filter))
            instances.push_back({i, std::move(ideal)});
    }

    // Workers claim instances by index; results land in instance order.
    std::vector<InstanceResult> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < instances.size(); k = next++) {
            const auto& inst = instances[k];
            results[k] = evaluate(lattices[inst.lattice].lattice, distributive[inst.lattice], inst.ideal, config.claims);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < config.worker_count; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    summary.instance_count = instances.size();
    for (ClaimId id : config.claims)
        summary.per_claim.emplace_back(id, ClaimTally{});
    std::map<std::size_t, std::size_t> girths;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const auto& res = results[k];
        for (std::size_t c = 0; c < res.reports.size(); ++c) {
            const auto& rep = res.reports[c];
            auto& tally = summary.per_claim[c].second;
            switch (rep.status) {
            case ClaimStatus::holds:
                ++tally.holds;
                break;
            case ClaimStatus::fails:
                ++tally.fails;
                summary.counterexamples.push_back(
                    {lattices[instances[k].lattice].id, lattices[instances[k].lattice].lattice, instances[k].ideal, rep});
                break;
            case ClaimStatus::vacuous:
                ++tally.vacuous;
                break;
            }
        }
        if (res.girth) {
            ++girths[*res.girth];
            ++summary.cyclic_instances;
            summary.cyclic_core_or_pendant += res.core_or_pendant;
        }
    }
    summary.girth_histogram.assign(girths.begin(), girths.end());
    return summary;
}

std::string format_summary(const CensusSummary& s)
{
    std::ostringstream out;
    auto row = [&](const char* name, const std::vector<std::size_t>& counts) {
        out << name;
        for (std::size_t c : counts)
            out << ' ' << c;
        out << '\n';
    };
    row("lattices:", s.lattice_counts);
    row("swept:", s.swept_counts);
    out << "instances: " << s.instance_count << '\n';
    out << '\n' << std::left << std::setw(18) << "claim" << std::right << std::setw(9) << "HOLDS" << std::setw(9)
        << "FAILS" << std::setw(9) << "VACUOUS" << '\n';
    for (const auto& [id, t] : s.per_claim)
        out << std::left << std::setw(18) << to_string(id) << std::right << std::setw(9) << t.holds << std::setw(9)
            << t.fails << std::setw(9) << t.vacuous << '\n';
    out << '\n' << "girths:";
    if (s.girth_histogram.empty())
        out << " none";
    for (const auto& [g, c] : s.girth_histogram)
        out << ' ' << g << ':' << c;
    out << '\n';
    out << "cyclic graphs with every vertex in the core or of degree one: " << s.cyclic_core_or_pendant << '/'
        << s.cyclic_instances << '\n';
    out << "counterexamples: " << s.counterexamples.size() << '\n';
    return out.str();
}

nlohmann::json summary_to_json(const CensusSummary& s)
{
    nlohmann::json j;
    j["max_size"] = s.max_size;
    j["lattice_counts"] = s.lattice_counts;
    j["swept_counts"] = s.swept_counts;
    j["instance_count"] = s.instance_count;
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& [id, t] : s.per_claim)
        claims.push_back({{"claim", to_string(id)}, {"holds", t.holds}, {"fails", t.fails}, {"vacuous", t.vacuous}});
    j["per_claim"] = claims;
    nlohmann::json girths = nlohmann::json::array();
    for (const auto& [g, c] : s.girth_histogram)
        girths.push_back({{"girth", g}, {"count", c}});
    j["girth_histogram"] = girths;
    j["cyclic_instances"] = s.cyclic_instances;
    j["cyclic_core_or_pendant"] = s.cyclic_core_or_pendant;
    nlohmann::json cexs = nlohmann::json::array();
    for (const auto& c : s.counterexamples)
        cexs.push_back({{"lattice_id", c.lattice_id},
                        {"lattice", serialize(c.lattice.to_spec())},
                        {"ideal", format_label_list(c.lattice, c.ideal.members())},
                        {"report", report_to_json(c.lattice, c.report)}});
    j["counterexamples"] = cexs;
    return j;
}

// ---------------------------------------------------------------------------
// Search and replay files

std::optional<Counterexample> search_counterexample(ClaimId claim, std::size_t max_size, bool allow_size_8)
{
    if (max_size == kMaxCensusSize && !allow_size_8)
        throw PreconditionError("size 8 needs an explicit opt-in");
    for (auto& cl : enumerate_lattices(max_size)) {
        const bool distributive = is_distributive(cl.lattice);
        if (requires_distributive(claim) && !distributive)
            continue;
        for (auto& ideal : ideals_for(cl.lattice, IdealFilter::proper)) {
            ClaimReport rep = check_claim(claim, cl.lattice, ideal);
            if (rep.status == ClaimStatus::fails)
                return Counterexample{cl.id, cl.lattice, ideal, rep};
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> search_counterexample(std::string_view claim, std::size_t max_size, bool allow_size_8)
{
    auto id = parse_claim_id(claim);
    if (!id)
        throw PreconditionError("unknown claim id '" + std::string(claim) + "'");
    return search_counterexample(*id, max_size, allow_size_8);
}

std::string counterexample_file(const Counterexample& cex)
{
    std::ostringstream out;
    out << "# counterexample to " << to_string(cex.report.claim) << " (census lattice " << cex.lattice_id << ")\n";
    out << "# ideal: " << format_label_list(cex.lattice, cex.ideal.members()) << '\n';
    out << "# report: " << format_report_line(cex.lattice, cex.report) << '\n';
    out << "# replay: zdlat check <this file> --ideal " << format_label_list(cex.lattice, cex.ideal.members())
        << " --claim " << to_string(cex.report.claim) << '\n';
    out << serialize(cex.lattice.to_spec());
    return out.str();
}

std::vector<std::filesystem::path> write_counterexamples(const std::vector<Counterexample>& cexs,
                                                         const std::filesystem::path& dir,
                                                         std::size_t per_claim_limit)
{
    std::filesystem::create_directories(dir);
    std::map<ClaimId, std::size_t> written;
    std::vector<std::filesystem::path> paths;
    for (const auto& c : cexs) {
        std::size_t& k = written[c.report.claim];
        if (k >= per_claim_limit)
            continue;
        ++k;
        auto path = dir / (std::string(to_string(c.report.claim)) + "-" + std::to_string(k) + ".lat");
        std::ofstream f(path);
        if (!f)
            throw Error("cannot write " + path.string());
        f << counterexample_file(c);
        paths.push_back(path);
    }
    return paths;
}

} // namespace zdlat
