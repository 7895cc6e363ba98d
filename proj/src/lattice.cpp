#include "zdlat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace zdlat {

bool canonical_less(ElementSet a, ElementSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.to_vector() < b.to_vector();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

/// Splits [begin, end) of `line` on `sep`, trimming whitespace. Columns are
/// reported relative to the full line.
std::vector<Token> split_trimmed(std::string_view line, std::size_t begin, char sep)
{
    std::vector<Token> out;
    std::size_t start = begin;
    while (true) {
        std::size_t stop = line.find(sep, start);
        if (stop == std::string_view::npos)
            stop = line.size();
        std::size_t a = start, b = stop;
        while (a < b && is_space(line[a]))
            ++a;
        while (b > a && is_space(line[b - 1]))
            --b;
        out.push_back({std::string(line.substr(a, b - a)), (a < b ? a : start) + 1});
        if (stop == line.size())
            break;
        start = stop + 1;
    }
    return out;
}

std::vector<Token> split_whitespace(std::string_view line, std::size_t begin)
{
    std::vector<Token> out;
    std::size_t i = begin;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        if (i >= line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j]))
            ++j;
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
    }
    return out;
}

/// Position just after `keyword:` if the line starts with it (after leading
/// whitespace), npos otherwise.
std::size_t match_keyword(std::string_view line, std::string_view keyword)
{
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i]))
        ++i;
    if (line.substr(i, keyword.size()) != keyword)
        return std::string_view::npos;
    i += keyword.size();
    while (i < line.size() && is_space(line[i]))
        ++i;
    if (i >= line.size() || line[i] != ':')
        return std::string_view::npos;
    return i + 1;
}

} // namespace

bool is_valid_label(std::string_view label)
{
    if (label.empty())
        return false;
    return std::none_of(label.begin(), label.end(),
                        [](char c) { return is_space(c) || c == ',' || c == '<' || c == '#'; });
}

LatticeSpec parse_lattice(std::string_view text)
{
    enum class State { want_elements, want_covers, in_covers };
    State state = State::want_elements;
    LatticeSpec spec;
    std::unordered_map<std::string, std::size_t> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (std::all_of(line.begin(), line.end(), is_space))
            continue;

        if (state == State::want_elements) {
            std::size_t after = match_keyword(line, "elements");
            if (after == std::string_view::npos)
                throw ParseError(line_no, 1, "expected 'elements:'");
            for (auto& tok : split_whitespace(line, after)) {
                if (!is_valid_label(tok.text))
                    throw ParseError(line_no, tok.column, "invalid label '" + tok.text + "'");
                if (!seen.emplace(tok.text, spec.element_labels.size()).second)
                    throw ParseError(line_no, tok.column, "duplicate label '" + tok.text + "'");
                spec.element_labels.push_back(tok.text);
            }
            if (spec.element_labels.empty())
                throw ParseError(line_no, after + 1, "'elements:' lists no labels");
            state = State::want_covers;
            continue;
        }

        std::size_t begin = 0;
        if (state == State::want_covers) {
            begin = match_keyword(line, "covers");
            if (begin == std::string_view::npos)
                throw ParseError(line_no, 1, "expected 'covers:'");
            state = State::in_covers;
        }
        else if (match_keyword(line, "elements") != std::string_view::npos
                 || match_keyword(line, "covers") != std::string_view::npos) {
            throw ParseError(line_no, 1, "section keyword repeated");
        }

        auto items = split_trimmed(line, begin, ',');
        for (std::size_t k = 0; k < items.size(); ++k) {
            const Token& item = items[k];
            if (item.text.empty()) {
                // A trailing comma continues the list on the next line; a
                // covers line may also be empty.
                if (k + 1 == items.size())
                    continue;
                throw ParseError(line_no, item.column, "empty cover pair");
            }
            std::size_t lt = item.text.find('<');
            if (lt == std::string::npos)
                throw ParseError(line_no, item.column, "expected 'lower<upper', got '" + item.text + "'");
            auto lo = split_trimmed(item.text, 0, '<');
            if (lo.size() != 2 || lo[0].text.empty() || lo[1].text.empty())
                throw ParseError(line_no, item.column, "expected 'lower<upper', got '" + item.text + "'");
            for (const auto& side : lo) {
                if (!seen.count(side.text))
                    throw ParseError(line_no, item.column + side.column - 1,
                                     "unknown label '" + side.text + "' in cover pair");
            }
            if (lo[0].text == lo[1].text)
                throw ParseError(line_no, item.column, "cover pair relates '" + lo[0].text + "' to itself");
            spec.cover_pairs.emplace_back(lo[0].text, lo[1].text);
        }
    }
    if (state == State::want_elements)
        throw ParseError(line_no, 1, "missing 'elements:' line");
    if (state == State::want_covers)
        throw ParseError(line_no, 1, "missing 'covers:' line");
    return spec;
}

std::string serialize(const LatticeSpec& spec)
{
    std::ostringstream out;
    out << "elements:";
    for (const auto& l : spec.element_labels)
        out << ' ' << l;
    out << "\ncovers:";
    for (std::size_t i = 0; i < spec.cover_pairs.size(); ++i) {
        out << (i == 0 ? " " : ", ") << spec.cover_pairs[i].first << '<' << spec.cover_pairs[i].second;
    }
    out << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Construction

Lattice build_lattice(const LatticeSpec& spec)
{
    using K = LatticeError::Kind;
    const std::size_t n = spec.element_labels.size();
    if (n == 0)
        throw LatticeError(K::invalid_spec, "lattice has no elements");
    if (n > kMaxElements)
        throw LatticeError(K::too_large, "lattice has " + std::to_string(n) + " elements; at most "
                                             + std::to_string(kMaxElements) + " are supported");

    std::unordered_map<std::string, Element> index;
    for (Element i = 0; i < n; ++i) {
        const auto& l = spec.element_labels[i];
        if (!is_valid_label(l))
            throw LatticeError(K::invalid_spec, "invalid label '" + l + "'");
        if (!index.emplace(l, i).second)
            throw LatticeError(K::invalid_spec, "duplicate label '" + l + "'");
    }

    Lattice lat;
    lat.labels_ = spec.element_labels;
    lat.down_.assign(n, ElementSet{});
    for (Element i = 0; i < n; ++i)
        lat.down_[i].insert(i);
    for (const auto& [lo, hi] : spec.cover_pairs) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end() || b == index.end())
            throw LatticeError(K::invalid_spec, "cover pair " + lo + "<" + hi + " names an unknown label");
        if (a->second == b->second)
            throw LatticeError(K::invalid_spec, "cover pair " + lo + "<" + hi + " is reflexive");
        lat.down_[b->second].insert(a->second);
    }

    // Reflexive-transitive closure over bit rows.
    for (Element k = 0; k < n; ++k)
        for (Element i = 0; i < n; ++i)
            if (lat.down_[i].contains(k))
                lat.down_[i] |= lat.down_[k];

    lat.up_.assign(n, ElementSet{});
    for (Element b = 0; b < n; ++b)
        lat.down_[b].for_each([&](Element a) { lat.up_[a].insert(b); });

    for (Element a = 0; a < n; ++a) {
        ElementSet cyc = (lat.down_[a] & lat.up_[a]) - ElementSet::singleton(a);
        if (!cyc.empty())
            throw LatticeError(K::not_a_poset, "covers contain a cycle through '" + lat.labels_[a] + "' and '"
                                                   + lat.labels_[cyc.first()] + "'");
    }

    const ElementSet all = ElementSet::universe(n);
    std::vector<Element> minimal, maximal;
    for (Element a = 0; a < n; ++a) {
        if (lat.down_[a] == ElementSet::singleton(a))
            minimal.push_back(a);
        if (lat.up_[a] == ElementSet::singleton(a))
            maximal.push_back(a);
    }
    auto names = [&](const std::vector<Element>& v) {
        std::string s;
        for (Element e : v)
            s += (s.empty() ? "" : ", ") + lat.labels_[e];
        return s;
    };
    if (minimal.size() != 1 || lat.up_[minimal[0]] != all)
        throw LatticeError(K::no_unique_bottom, "no unique bottom element (minimal: " + names(minimal) + ")");
    if (maximal.size() != 1 || lat.down_[maximal[0]] != all)
        throw LatticeError(K::no_unique_top, "no unique top element (maximal: " + names(maximal) + ")");
    lat.bottom_ = minimal[0];
    lat.top_ = maximal[0];

    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a) {
        for (Element b = a; b < n; ++b) {
            ElementSet lower = lat.down_[a] & lat.down_[b];
            ElementSet upper = lat.up_[a] & lat.up_[b];
            std::optional<Element> m, j;
            lower.for_each([&](Element c) {
                if (lower.is_subset_of(lat.down_[c]))
                    m = c;
            });
            upper.for_each([&](Element c) {
                if (upper.is_subset_of(lat.up_[c]))
                    j = c;
            });
            if (!m)
                throw LatticeError(K::not_a_lattice, "'" + lat.labels_[a] + "' and '" + lat.labels_[b]
                                                         + "' have no unique meet");
            if (!j)
                throw LatticeError(K::not_a_lattice, "'" + lat.labels_[a] + "' and '" + lat.labels_[b]
                                                         + "' have no unique join");
            lat.meet_[a * n + b] = lat.meet_[b * n + a] = *m;
            lat.join_[a * n + b] = lat.join_[b * n + a] = *j;
        }
    }

    lat.upper_covers_.assign(n, ElementSet{});
    lat.lower_covers_.assign(n, ElementSet{});
    for (Element a = 0; a < n; ++a) {
        ElementSet strict_up = lat.up_[a] - ElementSet::singleton(a);
        strict_up.for_each([&](Element c) {
            ElementSet between = (lat.down_[c] - ElementSet::singleton(c)) & strict_up;
            if (between.empty()) {
                lat.upper_covers_[a].insert(c);
                lat.lower_covers_[c].insert(a);
            }
        });
    }

    std::vector<Element> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), Element{0});
    std::sort(by_rank.begin(), by_rank.end(),
              [&](Element x, Element y) { return lat.down_[x].size() < lat.down_[y].size(); });
    lat.height_.assign(n, 0);
    for (Element x : by_rank)
        lat.lower_covers_[x].for_each([&](Element c) { lat.height_[x] = std::max(lat.height_[x], lat.height_[c] + 1); });

    // FNV-1a over labels and order rows.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(n);
    for (Element i = 0; i < n; ++i) {
        for (char c : lat.labels_[i])
            mix(static_cast<unsigned char>(c));
        mix(lat.down_[i].bits());
    }
    lat.fingerprint_ = h;
    return lat;
}

std::optional<Element> Lattice::find(std::string_view label) const
{
    for (Element i = 0; i < size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

Element Lattice::index_of(std::string_view label) const
{
    if (auto e = find(label))
        return *e;
    throw PreconditionError("unknown element label '" + std::string(label) + "'");
}

LatticeSpec Lattice::to_spec() const
{
    LatticeSpec spec;
    spec.element_labels = labels_;
    for (Element a = 0; a < size(); ++a)
        upper_covers_[a].for_each([&](Element c) { spec.cover_pairs.emplace_back(labels_[a], labels_[c]); });
    return spec;
}

// ---------------------------------------------------------------------------
// Order-theoretic properties

bool is_distributive(const Lattice& l)
{
    const std::size_t n = l.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = b + 1; c < n; ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
                    return false;
    return true;
}

bool is_join_distributive(const Lattice& l)
{
    const std::size_t n = l.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = b + 1; c < n; ++c)
                if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c)))
                    return false;
    return true;
}

bool is_modular(const Lattice& l)
{
    const std::size_t n = l.size();
    for (Element a = 0; a < n; ++a)
        for (Element c = 0; c < n; ++c) {
            if (!l.leq(a, c))
                continue;
            for (Element b = 0; b < n; ++b)
                if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c))
                    return false;
        }
    return true;
}

const char* to_string(SublatticeWitness::Kind kind)
{
    return kind == SublatticeWitness::Kind::M3 ? "M3" : "N5";
}

std::optional<SublatticeWitness> find_forbidden_sublattice(const Lattice& l)
{
    const std::size_t n = l.size();
    // A copy of M3 or N5 is fixed by its bottom o and top i; the three middle
    // elements lie strictly inside [o, i] and pairwise meet to o and join to i
    // except for the chain a < c in N5.
    for (Element o = 0; o < n; ++o) {
        for (Element i = 0; i < n; ++i) {
            if (o == i || !l.leq(o, i))
                continue;
            ElementSet inner = (l.upper_set(o) & l.principal_ideal(i)) - ElementSet{o, i};
            auto mids = inner.to_vector();
            auto complements = [&](Element x, Element y) { return l.meet(x, y) == o && l.join(x, y) == i; };
            for (std::size_t p = 0; p < mids.size(); ++p) {
                for (std::size_t q = p + 1; q < mids.size(); ++q) {
                    Element x = mids[p], y = mids[q];
                    if (!complements(x, y))
                        continue;
                    for (std::size_t r = q + 1; r < mids.size(); ++r) {
                        Element z = mids[r];
                        if (complements(x, z) && complements(y, z))
                            return SublatticeWitness{SublatticeWitness::Kind::M3, {o, x, y, z, i}};
                    }
                }
            }
            for (Element a : mids)
                for (Element c : mids) {
                    if (a == c || !l.leq(a, c))
                        continue;
                    for (Element b : mids)
                        if (b != a && b != c && complements(a, b) && complements(c, b))
                            return SublatticeWitness{SublatticeWitness::Kind::N5, {o, a, c, b, i}};
                }
        }
    }
    return std::nullopt;
}

bool validate_witness(const Lattice& l, const SublatticeWitness& w)
{
    if (w.embedding.size() != 5)
        return false;
    for (Element e : w.embedding)
        if (e >= l.size())
            return false;
    ElementSet s = ElementSet::from(w.embedding);
    if (s.size() != 5)
        return false;
    for (Element a : w.embedding)
        for (Element b : w.embedding)
            if (!s.contains(l.meet(a, b)) || !s.contains(l.join(a, b)))
                return false;
    const Element o = w.embedding[0], i = w.embedding[4];
    auto complements = [&](Element x, Element y) { return l.meet(x, y) == o && l.join(x, y) == i; };
    if (w.kind == SublatticeWitness::Kind::M3) {
        Element x = w.embedding[1], y = w.embedding[2], z = w.embedding[3];
        return complements(x, y) && complements(x, z) && complements(y, z);
    }
    Element a = w.embedding[1], c = w.embedding[2], b = w.embedding[3];
    return l.leq(o, a) && l.leq(a, c) && l.leq(c, i) && complements(a, b) && complements(c, b);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::uint64_t element_signature(const Lattice& l, Element a)
{
    return (std::uint64_t{l.height(a)} << 40) | (std::uint64_t{l.lower_covers(a).size()} << 32)
           | (std::uint64_t{l.upper_covers(a).size()} << 24) | (std::uint64_t{l.principal_ideal(a).size()} << 12)
           | std::uint64_t{l.upper_set(a).size()};
}

} // namespace

std::vector<std::uint64_t> invariant_vector(const Lattice& l)
{
    std::vector<std::uint64_t> v(l.size());
    for (Element a = 0; a < l.size(); ++a)
        v[a] = element_signature(l, a);
    std::sort(v.begin(), v.end());
    return v;
}

std::optional<std::vector<Element>> lattices_isomorphic(const Lattice& l1, const Lattice& l2)
{
    const std::size_t n = l1.size();
    if (n != l2.size() || invariant_vector(l1) != invariant_vector(l2))
        return std::nullopt;

    std::vector<std::uint64_t> sig1(n), sig2(n);
    for (Element a = 0; a < n; ++a) {
        sig1[a] = element_signature(l1, a);
        sig2[a] = element_signature(l2, a);
    }
    // Assign in order of increasing height so comparabilities with already
    // mapped elements prune early.
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return l1.height(x) < l1.height(y); });

    std::vector<Element> image(n, n);
    ElementSet used;
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n)
            return true;
        Element a = order[depth];
        for (Element b = 0; b < n; ++b) {
            if (used.contains(b) || sig1[a] != sig2[b])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                Element p = order[k];
                ok = l1.leq(p, a) == l2.leq(image[p], b) && l1.leq(a, p) == l2.leq(b, image[p]);
            }
            if (!ok)
                continue;
            image[a] = b;
            used.insert(b);
            if (extend(depth + 1))
                return true;
            used.erase(b);
        }
        image[a] = n;
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return image;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_label_list(const Lattice& l, ElementSet s)
{
    std::vector<std::string> names;
    s.for_each([&](Element e) { names.push_back(l.label(e)); });
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& name : names)
        out += (out.empty() ? "" : ",") + name;
    return out;
}

std::string format_set(const Lattice& l, ElementSet s) { return "{" + format_label_list(l, s) + "}"; }

} // namespace zdlat
