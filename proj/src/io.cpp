#include "basicset/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace basicset {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (!tokens.empty()) fn(line_no, tokens);
    }
}

Rat token_rat(const Token& t, int line) {
    try {
        return parse_rat(t.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, t.column);
    }
}

Rat json_rat(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.dump());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("coordinate must be an integer or a \"p/q\" string, got " + j.dump());
}

// Canonical index of a raw value on one axis.
std::int64_t lookup(const CanonicalForm& form, int axis, const Rat& raw) {
    const auto& vals = form.raw_values[axis];
    auto it = std::lower_bound(vals.begin(), vals.end(), raw);
    if (it == vals.end() || *it != raw) return -1;
    return it - vals.begin();
}

std::string raw_point_string(const std::vector<Rat>& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += rat_string(r[i]);
    }
    return s + ")";
}

}  // namespace

CanonicalForm parse_points_text(const std::string& text) {
    std::vector<std::array<Rat, 3>> raw;
    int dim = 0;
    for_each_line(text, [&](int line_no, const std::vector<Token>& tokens) {
        int arity = static_cast<int>(tokens.size());
        if (arity != 2 && arity != 3) {
            throw ParseError("expected 2 or 3 coordinates, found " + std::to_string(arity), line_no,
                             tokens.front().column);
        }
        if (dim == 0) dim = arity;
        if (arity != dim) {
            throw ParseError("point has " + std::to_string(arity) + " coordinates, earlier points have " +
                                 std::to_string(dim),
                             line_no, tokens.front().column);
        }
        std::array<Rat, 3> p{0, 0, 0};
        for (int a = 0; a < arity; ++a) p[a] = token_rat(tokens[a], line_no);
        raw.push_back(p);
    });
    return canonicalize_raw(dim == 0 ? 3 : dim, raw);
}

CanonicalForm parse_points_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset only; report it as column of line 1
        throw ParseError(e.what(), 1, static_cast<int>(e.byte));
    }
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
        throw ParseError("expected an object with a \"points\" array", 1, 1);
    }
    int dim = j.value("dim", 3);
    if (dim != 2 && dim != 3) throw ParseError("\"dim\" must be 2 or 3", 1, 1);
    std::vector<std::array<Rat, 3>> raw;
    int k = 0;
    for (const auto& p : j["points"]) {
        ++k;
        if (!p.is_array() || static_cast<int>(p.size()) != dim) {
            throw ParseError("point " + std::to_string(k) + " must have " + std::to_string(dim) + " coordinates", 1,
                             1);
        }
        std::array<Rat, 3> r{0, 0, 0};
        try {
            for (int a = 0; a < dim; ++a) r[a] = json_rat(p[a]);
        } catch (const std::invalid_argument& e) {
            throw ParseError("point " + std::to_string(k) + ": " + e.what(), 1, 1);
        }
        raw.push_back(r);
    }
    return canonicalize_raw(dim, raw);
}

CanonicalForm parse_points(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_points_json(text);
    return parse_points_text(text);
}

std::string format_points_text(const PointSet3& set) {
    std::ostringstream os;
    for (const auto& p : set.points()) {
        os << p.x << ' ' << p.y;
        if (set.dim() == 3) os << ' ' << p.z;
        os << '\n';
    }
    return os.str();
}

nlohmann::json points_json(const PointSet3& set) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : set.points()) {
        if (set.dim() == 3) {
            pts.push_back({p.x, p.y, p.z});
        } else {
            pts.push_back({p.x, p.y});
        }
    }
    return {{"dim", set.dim()}, {"points", pts}};
}

PointFunction parse_values(const std::string& text, const CanonicalForm& form) {
    const int dim = form.set.dim();
    std::vector<std::pair<std::vector<Rat>, Rat>> entries;

    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), 1, static_cast<int>(e.byte));
        }
        if (!j.contains("values") || !j["values"].is_array()) {
            throw ParseError("expected an object with a \"values\" array", 1, 1);
        }
        int k = 0;
        for (const auto& row : j["values"]) {
            ++k;
            if (!row.is_array() || static_cast<int>(row.size()) != dim + 1) {
                throw ParseError("value entry " + std::to_string(k) + " must have " + std::to_string(dim + 1) +
                                     " fields",
                                 1, 1);
            }
            std::vector<Rat> coords;
            try {
                for (int a = 0; a < dim; ++a) coords.push_back(json_rat(row[a]));
                entries.emplace_back(coords, json_rat(row[dim]));
            } catch (const std::invalid_argument& e) {
                throw ParseError("value entry " + std::to_string(k) + ": " + e.what(), 1, 1);
            }
        }
    } else {
        for_each_line(text, [&](int line_no, const std::vector<Token>& tokens) {
            if (static_cast<int>(tokens.size()) != dim + 1) {
                throw ParseError("expected " + std::to_string(dim) + " coordinates and a value", line_no,
                                 tokens.front().column);
            }
            std::vector<Rat> coords;
            for (int a = 0; a < dim; ++a) coords.push_back(token_rat(tokens[a], line_no));
            entries.emplace_back(coords, token_rat(tokens[dim], line_no));
        });
    }

    PointFunction f;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& [coords, value] = entries[k];
        Point3 p;
        bool known = true;
        for (int a = 0; a < dim; ++a) {
            auto idx = lookup(form, a, coords[a]);
            known = known && idx >= 0;
            p[axis_from_index(a)] = idx;
        }
        if (!known || !form.set.contains(p)) {
            throw DomainMismatch("value given for " + raw_point_string(coords) + ", which is not in the point set");
        }
        if (!f.emplace(p, value).second) {
            throw DomainMismatch("two values given for " + raw_point_string(coords));
        }
    }
    if (f.size() != form.set.size()) {
        throw DomainMismatch("values cover " + std::to_string(f.size()) + " of " +
                             std::to_string(form.set.size()) + " points");
    }
    return f;
}

nlohmann::json certificate_json(const Certificate& cert) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : cert.weights) {
        if (w.fits_slong_p()) {
            arr.push_back(w.get_si());
        } else {
            arr.push_back(w.get_str());
        }
    }
    return arr;
}

nlohmann::json verdict_json(const Verdict& v) {
    if (const auto* nb = std::get_if<NonBasic>(&v)) {
        return {{"verdict", "nonbasic"}, {"certificate", certificate_json(nb->certificate)}};
    }
    return {{"verdict", "basic"}};
}

nlohmann::json decomposition_json(const Decomposition& d, const CanonicalForm& form) {
    nlohmann::json out = nlohmann::json::object();
    for (Axis a : axes(form.set.dim())) {
        nlohmann::json table = nlohmann::json::object();
        for (const auto& [index, value] : d.tables[axis_index(a)]) {
            table[rat_string(form.raw_values[axis_index(a)].at(static_cast<std::size_t>(index)))] = rat_string(value);
        }
        out[std::string("f") + std::to_string(axis_index(a) + 1)] = table;
    }
    return out;
}

}  // namespace basicset
