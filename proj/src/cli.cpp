#include "zdlat/cli.hpp"

#include "zdlat/census.hpp"
#include "zdlat/claims.hpp"
#include "zdlat/fixtures.hpp"
#include "zdlat/verify.hpp"
#include "zdlat/zdgraph.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace zdlat {

namespace {

struct IdealFlags {
    std::string labels;
    std::string principal;
};

void add_ideal_flags(CLI::App* cmd, IdealFlags& flags)
{
    auto* a = cmd->add_option("--ideal", flags.labels, "Ideal as comma-separated labels, e.g. 0,a,c");
    auto* b = cmd->add_option("--ideal-principal", flags.principal, "Principal ideal (x] generated by a label");
    a->excludes(b);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Lattice load_lattice(const std::string& path)
{
    const std::string text = read_file(path);
    try {
        return parse_and_build(text);
    }
    catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

/// Resolves the ideal flags; the default is {bottom}.
IdealSet resolve_ideal(const Lattice& l, const IdealFlags& flags)
{
    if (!flags.principal.empty()) {
        auto g = l.find(flags.principal);
        if (!g)
            throw PreconditionError("unknown label '" + flags.principal + "'");
        return make_ideal_set(l, l.principal_ideal(*g));
    }
    if (!flags.labels.empty())
        return ideal_from_labels(l, flags.labels);
    return make_ideal_set(l, ElementSet::singleton(l.bottom()));
}

IdealSet resolve_proper_ideal(const Lattice& l, const IdealFlags& flags)
{
    IdealSet ideal = resolve_ideal(l, flags);
    if (!ideal.is_proper())
        throw PreconditionError("ideal " + format_set(l, ideal.members()) + " is the whole lattice");
    return ideal;
}

std::string witness_labels(const Lattice& l, const SublatticeWitness& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.embedding.size(); ++i)
        s += (i ? "," : "") + l.label(w.embedding[i]);
    return s;
}

/// Like check_claim, but a distributivity-assuming claim on another lattice
/// is reported VACUOUS instead of rejected.
ClaimReport check_any(ClaimId id, const Lattice& l, const IdealSet& ideal, bool distributive)
{
    if (requires_distributive(id) && !distributive) {
        ClaimReport r{id};
        r.notes.push_back("lattice is not distributive; the statement assumes it");
        return r;
    }
    return check_claim(id, l, ideal);
}

int cmd_check(const std::string& path, const IdealFlags& ideal_flags, const std::vector<std::string>& claim_names,
              bool all_claims, bool json, std::ostream& out)
{
    Lattice l = load_lattice(path);
    const bool distributive = is_distributive(l);
    const bool modular = is_modular(l);
    auto witness = find_forbidden_sublattice(l);

    std::vector<ClaimId> claims;
    if (all_claims)
        claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
    for (const auto& name : claim_names) {
        auto id = parse_claim_id(name);
        if (!id)
            throw PreconditionError("unknown claim '" + name + "'");
        claims.push_back(*id);
    }

    std::vector<ClaimReport> reports;
    std::optional<IdealSet> ideal;
    if (!claims.empty()) {
        ideal = resolve_ideal(l, ideal_flags);
        for (ClaimId id : claims)
            reports.push_back(check_any(id, l, *ideal, distributive));
    }

    if (json) {
        nlohmann::json j;
        j["elements"] = l.size();
        j["bottom"] = l.label(l.bottom());
        j["top"] = l.label(l.top());
        j["distributive"] = distributive;
        j["modular"] = modular;
        if (witness) {
            nlohmann::json labels = nlohmann::json::array();
            for (Element e : witness->embedding)
                labels.push_back(l.label(e));
            j["forbidden_sublattice"] = {{"kind", to_string(witness->kind)}, {"elements", labels}};
        }
        else {
            j["forbidden_sublattice"] = nullptr;
        }
        if (ideal) {
            nlohmann::json labels = nlohmann::json::array();
            ideal->members().for_each([&](Element e) { labels.push_back(l.label(e)); });
            j["ideal"] = labels;
        }
        j["claims"] = nlohmann::json::array();
        for (const auto& r : reports)
            j["claims"].push_back(report_to_json(l, r));
        out << j.dump(2) << '\n';
    }
    else {
        out << "elements: " << l.size() << '\n';
        out << "bottom: " << l.label(l.bottom()) << '\n';
        out << "top: " << l.label(l.top()) << '\n';
        out << "distributive: " << (distributive ? "yes" : "no") << '\n';
        out << "modular: " << (modular ? "yes" : "no") << '\n';
        if (witness)
            out << "forbidden sublattice: " << to_string(witness->kind) << ' ' << witness_labels(l, *witness) << '\n';
        if (ideal)
            out << "ideal: " << format_set(l, ideal->members()) << '\n';
        for (const auto& r : reports) {
            out << format_report_line(l, r) << '\n';
            for (const auto& note : r.notes)
                out << "  note: " << note << '\n';
        }
    }
    for (const auto& r : reports)
        if (r.status == ClaimStatus::fails)
            return kExitFailed;
    return kExitOk;
}

int cmd_ideals(const std::string& path, const IdealFlags& ideal_flags, const std::string& quotient, std::ostream& out)
{
    Lattice l = load_lattice(path);
    if (!quotient.empty()) {
        IdealSet ideal = resolve_ideal(l, ideal_flags);
        auto x = l.find(quotient);
        if (!x)
            throw PreconditionError("unknown label '" + quotient + "'");
        ElementSet q = quotient_ideal(l, ideal, *x);
        out << "(I:" << quotient << ") = " << format_set(l, q) << (is_ideal(l, q) ? "" : " (not an ideal)") << '\n';
        return kExitOk;
    }
    auto ideals = enumerate_ideals(l);
    std::size_t primes = 0;
    for (const auto& i : ideals) {
        out << format_set(l, i.members());
        if (!i.is_proper())
            out << " improper";
        if (i.is_prime()) {
            out << " prime";
            ++primes;
        }
        out << '\n';
    }
    out << "ideals: " << ideals.size() << "  prime: " << primes << '\n';
    return kExitOk;
}

int cmd_zdgraph(const std::string& path, const IdealFlags& ideal_flags, bool classic, bool dot, bool json,
                std::ostream& out)
{
    Lattice l = load_lattice(path);
    ZdGraph g = classic ? build_gamma(l) : build_gamma_I(l, resolve_proper_ideal(l, ideal_flags));
    if (dot) {
        out << to_dot(g);
        return kExitOk;
    }
    GraphInvariants inv = invariants(g);
    if (json) {
        auto names = [&](ElementSet positions) {
            nlohmann::json a = nlohmann::json::array();
            positions.for_each([&](std::size_t p) { a.push_back(g.vertex_labels[p]); });
            return a;
        };
        auto edge_list = [&](const std::vector<Edge>& edges) {
            nlohmann::json a = nlohmann::json::array();
            for (auto [u, v] : edges)
                a.push_back({g.vertex_labels[u], g.vertex_labels[v]});
            return a;
        };
        nlohmann::json j;
        j["rule"] = classic ? "classic" : "ideal";
        if (!classic) {
            nlohmann::json labels = nlohmann::json::array();
            g.origin.ideal.for_each([&](Element e) { labels.push_back(l.label(e)); });
            j["ideal"] = labels;
        }
        j["vertices"] = g.vertex_labels;
        j["edges"] = edge_list(g.graph.edges());
        j["connected"] = inv.connected;
        j["diameter"] = inv.diameter ? nlohmann::json(*inv.diameter) : nlohmann::json("INFINITE");
        j["girth"] = inv.girth ? nlohmann::json(*inv.girth) : nlohmann::json("ACYCLIC");
        j["cut_vertices"] = names(inv.cut_vertices);
        j["bridges"] = edge_list(inv.bridges);
        j["core_vertices"] = names(inv.core_vertices);
        j["core_edges"] = edge_list(inv.core_edges);
        j["clique_number"] = inv.clique_number;
        j["chromatic_number"] = inv.chromatic_number;
        nlohmann::json degrees = nlohmann::json::object();
        for (std::size_t p = 0; p < g.order(); ++p)
            degrees[g.vertex_labels[p]] = inv.degrees[p];
        j["degrees"] = degrees;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "|V| = " << g.order() << '\n';
    out << "vertex list:";
    for (const auto& name : g.vertex_labels)
        out << ' ' << name;
    out << '\n';
    for (auto [u, v] : g.graph.edges())
        out << "edge " << g.vertex_labels[u] << " -- " << g.vertex_labels[v] << '\n';
    out << format_invariants(g, inv);
    return kExitOk;
}

int cmd_radical(const std::string& path, const IdealFlags& ideal_flags, const std::string& variant_name,
                std::ostream& out)
{
    auto variant = parse_radical_variant(variant_name);
    if (!variant)
        throw PreconditionError("unknown variant '" + variant_name + "' (expected contained or containing)");
    Lattice l = load_lattice(path);
    IdealSet ideal = resolve_proper_ideal(l, ideal_flags);
    RadicalResult r = radical(l, ideal, *variant);
    out << "I = " << format_set(l, ideal.members()) << '\n';
    out << "primes " << to_string(*variant) << ": " << r.family_size << '\n';
    for (const auto& p : r.family)
        out << "  " << format_set(l, p.members()) << '\n';
    if (!r.value)
        out << "no prime " << to_string(*variant) << " in I\n";
    else if (*r.value == ideal.members())
        out << "√I = I\n";
    else
        out << "√I = " << format_set(l, *r.value) << " ≠ I\n";
    return kExitOk;
}

int cmd_verify(const std::string& figure1_path, bool json, std::ostream& out)
{
    std::vector<PaperCheck> checks =
        figure1_path.empty() ? verify_paper() : verify_paper(read_file(figure1_path));
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : checks)
            j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << j.dump(2) << '\n';
    }
    else {
        out << format_verification(checks);
    }
    return all_passed(checks) ? kExitOk : kExitFailed;
}

std::vector<ClaimId> parse_claim_list(const std::vector<std::string>& names)
{
    std::vector<ClaimId> out;
    for (const auto& n : names) {
        auto id = parse_claim_id(n);
        if (!id)
            throw PreconditionError("unknown claim '" + n + "'");
        out.push_back(*id);
    }
    return out;
}

constexpr std::size_t kFilesPerClaim = 3;

int cmd_census(CensusConfig config, const std::vector<std::string>& claims, const std::string& filter,
               const std::string& out_dir, bool json, std::ostream& out, std::ostream& err)
{
    if (!claims.empty())
        config.claims = parse_claim_list(claims);
    auto f = parse_ideal_filter(filter);
    if (!f)
        throw PreconditionError("unknown ideal filter '" + filter + "' (expected all, proper or principal)");
    config.ideal_filter = *f;
    if (config.allow_size_8 && config.max_size == kMaxCensusSize)
        err << "warning: size 8 is beyond the default bound of " << kDefaultCensusBound << '\n';
    config.validate();

    CensusSummary summary = run_census(config);
    if (json)
        out << summary_to_json(summary).dump(2) << '\n';
    else
        out << format_summary(summary);
    if (!out_dir.empty())
        for (const auto& p : write_counterexamples(summary.counterexamples, out_dir, kFilesPerClaim))
            err << "wrote " << p.string() << '\n';
    return summary.counterexamples.empty() ? kExitOk : kExitFailed;
}

int cmd_search(const std::string& claim, std::size_t max_size, bool allow_8, const std::string& out_dir,
               std::ostream& out)
{
    auto hit = search_counterexample(std::string_view(claim), max_size, allow_8);
    if (!hit) {
        out << "no counterexample for " << claim << " up to size " << max_size << '\n';
        return kExitOk;
    }
    const Lattice& l = hit->lattice;
    out << "counterexample: " << hit->lattice_id << " (" << l.size() << " elements) ideal "
        << format_set(l, hit->ideal.members()) << '\n';
    out << format_report_line(l, hit->report) << '\n';
    if (out_dir.empty()) {
        out << counterexample_file(*hit);
    }
    else {
        for (const auto& p : write_counterexamples({*hit}, out_dir, 1))
            out << "wrote " << p.string() << '\n';
    }
    return kExitFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Zero-divisor graphs and radicals of finite lattices", "zdlat"};
    app.require_subcommand(1);

    std::string file;
    IdealFlags ideal_flags;
    bool json = false;

    auto* check = app.add_subcommand("check", "Validate a lattice file and optionally test claims on it");
    std::vector<std::string> check_claims;
    bool all_claims = false;
    check->add_option("file", file, "Lattice file")->required();
    add_ideal_flags(check, ideal_flags);
    check->add_option("--claim", check_claims, "Claim to test (repeatable)");
    check->add_flag("--all-claims", all_claims, "Test every claim");
    check->add_flag("--json", json, "Structured output");

    auto* ideals = app.add_subcommand("ideals", "List ideals, or compute a quotient (I:x)");
    std::string quotient;
    ideals->add_option("file", file, "Lattice file")->required();
    add_ideal_flags(ideals, ideal_flags);
    ideals->add_option("--quotient", quotient, "Element x for (I:x)");

    auto* zd = app.add_subcommand("zdgraph", "Build the zero-divisor graph of a lattice with respect to an ideal");
    bool classic = false, dot = false;
    zd->add_option("file", file, "Lattice file")->required();
    add_ideal_flags(zd, ideal_flags);
    zd->add_flag("--gamma-classic", classic, "Classic graph with 0 as a vertex");
    zd->add_flag("--dot", dot, "Emit Graphviz DOT");
    zd->add_flag("--json", json, "Structured output");

    auto* rad = app.add_subcommand("radical", "Intersect the primes attached to an ideal");
    std::string variant = "contained";
    rad->add_option("file", file, "Lattice file")->required();
    add_ideal_flags(rad, ideal_flags);
    rad->add_option("--variant", variant, "contained or containing")->capture_default_str();

    auto* verify = app.add_subcommand("verify-paper", "Replay the worked examples against the built-in fixtures");
    std::string figure1_file;
    verify->add_option("--figure1-file", figure1_file, "Use this file for the nine-element lattice");
    verify->add_flag("--json", json, "Structured output");

    auto* census = app.add_subcommand("census", "Sweep claims over all small lattices");
    CensusConfig config;
    std::vector<std::string> census_claims;
    std::string filter = "proper";
    std::string out_dir;
    census->add_option("--max-size", config.max_size, "Largest lattice size")->capture_default_str();
    census->add_flag("--distributive-only", config.distributive_only, "Skip non-distributive lattices");
    census->add_option("--claims", census_claims, "Claims to sweep (default: all)")->delimiter(',');
    census->add_option("--ideals", filter, "all, proper or principal")->capture_default_str();
    census->add_option("--workers", config.worker_count, "Worker threads")->capture_default_str();
    census->add_flag("--allow-8", config.allow_size_8, "Permit --max-size 8");
    census->add_option("--out", out_dir, "Directory for counterexample files");
    census->add_flag("--json", json, "Structured output");

    auto* search = app.add_subcommand("search", "Find the first counterexample to a claim");
    std::string claim;
    std::size_t search_size = kDefaultCensusBound;
    bool search_allow_8 = false;
    search->add_option("claim", claim, "Claim id, e.g. P2.1-CONTAINED")->required();
    search->add_option("--max-size", search_size, "Largest lattice size")->capture_default_str();
    search->add_flag("--allow-8", search_allow_8, "Permit --max-size 8");
    search->add_option("--out", out_dir, "Directory for the counterexample file");

    std::vector<const char*> argv{"zdlat"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(file, ideal_flags, check_claims, all_claims, json, out);
        if (ideals->parsed())
            return cmd_ideals(file, ideal_flags, quotient, out);
        if (zd->parsed())
            return cmd_zdgraph(file, ideal_flags, classic, dot, json, out);
        if (rad->parsed())
            return cmd_radical(file, ideal_flags, variant, out);
        if (verify->parsed())
            return cmd_verify(figure1_file, json, out);
        if (census->parsed())
            return cmd_census(config, census_claims, filter, out_dir, json, out, err);
        if (search->parsed())
            return cmd_search(claim, search_size, search_allow_8, out_dir, out);
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace zdlat
