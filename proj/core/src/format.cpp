#include "acat/format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace acat {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back({number, std::move(t)});
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + message);
}

int parse_int(const std::string& token, int line, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                             token + "'");
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        parse_fail(line, std::string("integer out of range for ") + what);
    }
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    static const std::string forbidden = ":.=#()<>-";
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)) ||
            forbidden.find(c) != std::string::npos)
            return false;
    return true;
}

// Splits on whitespace.
std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace

NamedCategory parse_category(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) fail(errc::parse_error, "empty category document");

    size_t pos = 0;
    {
        const auto tk = tokens(lines[0].text);
        if (tk.size() != 2 || tk[0] != "objects:")
            parse_fail(lines[0].number, "expected header 'objects: <n>'");
        ++pos;
    }
    const int n_objects = parse_int(tokens(lines[0].text)[1], lines[0].number, "object count");

    NamedCategory doc;
    std::map<std::string, MorphismId> by_name;
    std::vector<Morphism> morphisms;
    struct RawComp {
        int line;
        std::string g, f, h;
    };
    std::vector<RawComp> raw_comps;

    for (; pos < lines.size(); ++pos) {
        const auto& [number, text_line] = lines[pos];
        const auto tk = tokens(text_line);
        if (tk[0] == "mor") {
            // mor <name>: <src> -> <tgt>
            if (tk.size() != 5 || tk[3] != "->" || tk[1].empty() || tk[1].back() != ':')
                parse_fail(number, "expected 'mor <name>: <src> -> <tgt>'");
            std::string name = tk[1].substr(0, tk[1].size() - 1);
            if (!valid_name(name)) parse_fail(number, "invalid morphism name '" + name + "'");
            if (by_name.count(name)) parse_fail(number, "duplicate morphism name '" + name + "'");
            const int src = parse_int(tk[2], number, "source object");
            const int tgt = parse_int(tk[4], number, "target object");
            if (src >= n_objects || tgt >= n_objects)
                parse_fail(number, "object index out of range");
            by_name[name] = static_cast<MorphismId>(morphisms.size());
            morphisms.push_back({src, tgt});
            doc.morphism_names.push_back(std::move(name));
        } else if (tk[0] == "comp") {
            // comp <g> . <f> = <h>
            if (tk.size() != 6 || tk[2] != "." || tk[4] != "=")
                parse_fail(number, "expected 'comp <g> . <f> = <h>'");
            raw_comps.push_back({number, tk[1], tk[3], tk[5]});
        } else {
            parse_fail(number, "unrecognized directive '" + tk[0] + "'");
        }
    }

    std::vector<CompositionRule> rules;
    for (const RawComp& rc : raw_comps) {
        auto lookup = [&](const std::string& name) -> MorphismId {
            auto it = by_name.find(name);
            if (it == by_name.end())
                fail(errc::unknown_name,
                     "line " + std::to_string(rc.line) + ": unknown morphism '" + name + "'");
            return it->second;
        };
        rules.push_back({lookup(rc.g), lookup(rc.f), lookup(rc.h)});
    }

    doc.category = build_category(n_objects, std::move(morphisms), rules);
    return doc;
}

std::string serialize_category(const Category& C, const std::vector<std::string>* names) {
    auto name_of = [&](MorphismId m) -> std::string {
        if (names) return (*names)[static_cast<size_t>(m)];
        return "m" + std::to_string(m);
    };

    std::ostringstream out;
    out << "objects: " << C.num_objects() << "\n";
    for (MorphismId m = 0; m < C.num_morphisms(); ++m)
        out << "mor " << name_of(m) << ": " << C.src(m) << " -> " << C.tgt(m) << "\n";
    for (MorphismId g = 0; g < C.num_morphisms(); ++g)
        for (MorphismId f = 0; f < C.num_morphisms(); ++f)
            if (C.composable(g, f))
                out << "comp " << name_of(g) << " . " << name_of(f) << " = "
                    << name_of(C.compose(g, f)) << "\n";
    return out.str();
}

Functor parse_functor(const std::string& text, const NamedCategory& source,
                      const NamedCategory& target) {
    const Category& S = source.category;
    const Category& T = target.category;

    std::map<std::string, MorphismId> target_by_name;
    for (MorphismId m = 0; m < T.num_morphisms(); ++m)
        target_by_name[target.morphism_names[static_cast<size_t>(m)]] = m;
    std::map<std::string, MorphismId> source_by_name;
    for (MorphismId m = 0; m < S.num_morphisms(); ++m)
        source_by_name[source.morphism_names[static_cast<size_t>(m)]] = m;

    std::vector<ObjectId> object_map(static_cast<size_t>(S.num_objects()), -1);
    std::vector<MorphismRef> morphism_map(static_cast<size_t>(S.num_morphisms()),
                                          MorphismRef::arrow(-1));
    std::vector<bool> morphism_seen(static_cast<size_t>(S.num_morphisms()), false);

    for (const Line& line : significant_lines(text)) {
        const auto tk = tokens(line.text);
        if (tk[0] == "obj") {
            if (tk.size() != 4 || tk[2] != "->")
                parse_fail(line.number, "expected 'obj <x> -> <y>'");
            const int x = parse_int(tk[1], line.number, "source object");
            const int y = parse_int(tk[3], line.number, "object image");
            if (x >= S.num_objects()) parse_fail(line.number, "source object out of range");
            if (y >= T.num_objects()) parse_fail(line.number, "object image out of range");
            if (object_map[static_cast<size_t>(x)] != -1)
                parse_fail(line.number, "duplicate image for object " + std::to_string(x));
            object_map[static_cast<size_t>(x)] = y;
        } else if (tk[0] == "mor") {
            if (tk.size() != 4 || tk[2] != "->")
                parse_fail(line.number, "expected 'mor <name> -> <image>'");
            auto it = source_by_name.find(tk[1]);
            if (it == source_by_name.end())
                fail(errc::unknown_name, "line " + std::to_string(line.number) +
                                             ": unknown source morphism '" + tk[1] + "'");
            if (morphism_seen[static_cast<size_t>(it->second)])
                parse_fail(line.number, "duplicate image for morphism '" + tk[1] + "'");
            morphism_seen[static_cast<size_t>(it->second)] = true;

            const std::string& img = tk[3];
            if (img.size() > 4 && img.substr(0, 3) == "id(" && img.back() == ')') {
                const int y =
                    parse_int(img.substr(3, img.size() - 4), line.number, "identity object");
                if (y >= T.num_objects())
                    parse_fail(line.number, "identity object out of range");
                morphism_map[static_cast<size_t>(it->second)] = MorphismRef::identity(y);
            } else {
                auto jt = target_by_name.find(img);
                if (jt == target_by_name.end())
                    fail(errc::unknown_name, "line " + std::to_string(line.number) +
                                                 ": unknown target morphism '" + img + "'");
                morphism_map[static_cast<size_t>(it->second)] = MorphismRef::arrow(jt->second);
            }
        } else {
            parse_fail(line.number, "unrecognized directive '" + tk[0] + "'");
        }
    }

    for (ObjectId x = 0; x < S.num_objects(); ++x)
        if (object_map[static_cast<size_t>(x)] == -1)
            fail(errc::parse_error,
                 "functor document is incomplete: no image for object " + std::to_string(x));
    for (MorphismId m = 0; m < S.num_morphisms(); ++m)
        if (!morphism_seen[static_cast<size_t>(m)])
            fail(errc::parse_error, "functor document is incomplete: no image for morphism '" +
                                        source.morphism_names[static_cast<size_t>(m)] + "'");

    return build_functor(S, T, std::move(object_map), std::move(morphism_map));
}

std::string serialize_functor(const Functor& F, const std::vector<std::string>* source_names,
                              const std::vector<std::string>* target_names) {
    auto name = [](const std::vector<std::string>* names, MorphismId m) -> std::string {
        if (names) return (*names)[static_cast<size_t>(m)];
        return "m" + std::to_string(m);
    };

    std::ostringstream out;
    for (ObjectId x = 0; x < F.source().num_objects(); ++x)
        out << "obj " << x << " -> " << F.object_image(x) << "\n";
    for (MorphismId m = 0; m < F.source().num_morphisms(); ++m) {
        out << "mor " << name(source_names, m) << " -> ";
        const MorphismRef img = F.morphism_image(m);
        if (img.is_identity())
            out << "id(" << img.identity_object() << ")";
        else
            out << name(target_names, img.morphism());
        out << "\n";
    }
    return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string instance_digest(const Category& C, const Functor* F) {
    std::string blob = serialize_category(C);
    if (F) blob += "--\n" + serialize_functor(*F);
    return "fnv1a64:" + hex64(fnv1a64(blob));
}

} // namespace acat
