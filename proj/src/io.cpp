#include "pretop/io.hpp"

#include <fstream>
#include <sstream>

namespace pretop {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_index(const std::string& tok, int bound, const char* what) {
    size_t used = 0;
    int value = -1;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(Errc::parse_error, std::string("expected a ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        fail(Errc::parse_error, std::string("trailing characters in ") + what + " '" + tok + "'");
    if (value < 0 || value >= bound)
        fail(Errc::parse_error, std::string(what) + " " + tok + " out of range", value);
    return value;
}

std::vector<int> parse_map_entries(const std::vector<std::string>& toks, size_t first) {
    std::vector<int> images;
    for (size_t i = first; i < toks.size(); ++i) {
        const std::string& t = toks[i]; // f(i)=j
        auto open_paren = t.find('(');
        auto close_paren = t.find(")=");
        if (t.rfind("f(", 0) != 0 || close_paren == std::string::npos)
            fail(Errc::parse_error, "map entries look like f(i)=j, got '" + t + "'");
        int idx = parse_index(t.substr(open_paren + 1, close_paren - open_paren - 1), 1 << 20,
                              "argument index");
        if (idx != static_cast<int>(images.size()))
            fail(Errc::parse_error, "map entries must be consecutive from f(0)", idx);
        images.push_back(parse_index(t.substr(close_paren + 2), 1 << 20, "image index"));
    }
    return images;
}

struct ParsedParts {
    int n = -1;
    std::vector<Mask> closures;
    std::vector<Mask> opens;
    bool has_opens = false;
    std::optional<std::vector<int>> map_images;
};

ParsedParts parse_parts(const std::string& text, int point_bound) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<Mask> closures;
    std::vector<bool> seen;
    std::vector<Mask> opens;
    bool has_opens = false;
    std::optional<std::vector<int>> map_images;

    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;

        if (toks[0] == "points:") {
            if (n >= 0) fail(Errc::parse_error, "duplicate points: line");
            if (toks.size() != 2) fail(Errc::parse_error, "points: expects one integer");
            n = parse_index(toks[1], point_bound + 1, "point count");
            if (n < 1) fail(Errc::parse_error, "points: must be positive");
            closures.assign(static_cast<size_t>(n), 0);
            seen.assign(static_cast<size_t>(n), false);
        } else if (toks[0] == "closure") {
            if (n < 0) fail(Errc::parse_error, "closure line before points:");
            if (toks.size() < 2 || toks[1].back() != ':')
                fail(Errc::parse_error, "closure line needs 'closure i:'");
            int x = parse_index(toks[1].substr(0, toks[1].size() - 1), n, "point index");
            if (seen[static_cast<size_t>(x)]) fail(Errc::parse_error, "duplicate closure line", x);
            seen[static_cast<size_t>(x)] = true;
            Mask m = 0;
            for (size_t i = 2; i < toks.size(); ++i) m |= bit(parse_index(toks[i], n, "point index"));
            closures[static_cast<size_t>(x)] = m;
        } else if (toks[0] == "open:") {
            if (n < 0) fail(Errc::parse_error, "open line before points:");
            has_opens = true;
            Mask m = 0;
            for (size_t i = 1; i < toks.size(); ++i) m |= bit(parse_index(toks[i], n, "point index"));
            opens.push_back(m);
        } else if (toks[0] == "map:") {
            if (map_images) fail(Errc::parse_error, "duplicate map line");
            map_images = parse_map_entries(toks, 1);
        } else {
            fail(Errc::parse_error, "unrecognized line: " + line);
        }
    }
    if (n < 0) fail(Errc::parse_error, "missing points: line");
    for (int x = 0; x < n; ++x)
        if (!seen[static_cast<size_t>(x)])
            fail(Errc::parse_error, "missing closure line for point " + std::to_string(x), x);
    return {n, std::move(closures), std::move(opens), has_opens, std::move(map_images)};
}

} // namespace

ParsedSpace parse_space_text(const std::string& text, int point_bound) {
    ParsedParts parts = parse_parts(text, point_bound);
    ParsedSpace out{Pretopology(std::move(parts.closures)), std::nullopt, std::move(parts.map_images)};
    if (parts.has_opens) out.topology = Topology::from_open_sets(parts.n, std::move(parts.opens));
    if (out.topology && !(out.topology->base() == out.space))
        fail(Errc::parse_error, "open sets disagree with the closure lines");
    return out;
}

RawSpace parse_raw_closures(const std::string& text, int point_bound) {
    ParsedParts parts = parse_parts(text, point_bound);
    return {parts.n, std::move(parts.closures)};
}

ParsedSpace load_space_file(const std::string& path, int point_bound) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space_text(buf.str(), point_bound);
}

std::string format_space(const Pretopology& space) {
    std::ostringstream os;
    os << "points: " << space.size() << "\n";
    for (int x = 0; x < space.size(); ++x) {
        os << "closure " << x << ":";
        for_each_point(space.singleton_closure(x), [&](int y) { os << ' ' << y; });
        os << "\n";
    }
    return os.str();
}

std::string format_topology(const Topology& t) {
    std::ostringstream os;
    os << format_space(t.base());
    for (Mask o : t.open_sets()) {
        os << "open:";
        for_each_point(o, [&](int y) { os << ' ' << y; });
        os << "\n";
    }
    return os.str();
}

std::vector<int> parse_map_text(const std::string& text, int domain_size, int codomain_size) {
    auto toks = tokens_of(text);
    std::vector<int> images;
    if (!toks.empty() && (toks[0] == "map:" || toks[0].rfind("f(", 0) == 0)) {
        images = parse_map_entries(toks, toks[0] == "map:" ? 1 : 0);
    } else {
        for (const auto& tok : toks) images.push_back(parse_index(tok, 1 << 20, "image index"));
    }
    if (static_cast<int>(images.size()) != domain_size)
        fail(Errc::parse_error, "map must list one image per domain point");
    for (int y : images)
        if (y < 0 || y >= codomain_size) fail(Errc::parse_error, "image index out of range", y);
    return images;
}

Mask parse_subset(const std::string& text, int n) {
    if (text == "-" || text.empty()) return 0;
    Mask m = 0;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) m |= bit(parse_index(tok, n, "point index"));
    return m;
}

std::vector<Mask> parse_family(const std::string& text, int n) {
    std::vector<Mask> out;
    if (text == "-" || text.empty()) return out;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ';')) out.push_back(parse_subset(part, n));
    return out;
}

namespace {

std::pair<std::vector<std::string>, std::vector<std::string>> split_sequence(const std::string& text) {
    std::string body = text;
    if (body.rfind("seq:", 0) == 0) body = body.substr(4);
    auto bar = body.find('|');
    if (bar == std::string::npos) fail(Errc::parse_error, "sequence literal needs 'prefix | cycle'");
    auto pre = tokens_of(body.substr(0, bar));
    auto cyc = tokens_of(body.substr(bar + 1));
    if (cyc.empty()) fail(Errc::parse_error, "sequence cycle must be nonempty");
    return {pre, cyc};
}

} // namespace

PointSequence parse_point_sequence(const std::string& text, int bound) {
    auto [pre, cyc] = split_sequence(text);
    std::vector<int> prefix, cycle;
    for (const auto& t : pre) prefix.push_back(parse_index(t, bound, "sequence value"));
    for (const auto& t : cyc) cycle.push_back(parse_index(t, bound, "sequence value"));
    return PointSequence(std::move(prefix), std::move(cycle));
}

SubsetSequence parse_subset_sequence(const std::string& text, int n) {
    auto [pre, cyc] = split_sequence(text);
    std::vector<Mask> prefix, cycle;
    for (const auto& t : pre) prefix.push_back(parse_subset(t, n));
    for (const auto& t : cyc) cycle.push_back(parse_subset(t, n));
    return SubsetSequence(std::move(prefix), std::move(cycle));
}

std::string format_subset(Mask m) {
    if (m == 0) return "-";
    std::string out;
    for_each_point(m, [&](int i) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    });
    return out;
}

} // namespace pretop
