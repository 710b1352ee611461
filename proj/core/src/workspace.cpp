#include "subext/workspace.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "subext/error.hpp"

namespace subext {

namespace {

struct Value {
    bool is_list = false;
    std::string scalar;
    std::vector<std::string> items;
    int column = 0;
};

struct Decl {
    int line = 0;
    std::string kind, name;
    std::map<std::string, Value> fields;
};

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'; }

class LineParser {
public:
    LineParser(const std::string& text, int line) : s_(text), line_(line) {}

    Decl parse() {
        Decl d;
        d.line = line_;
        d.kind = word("declaration keyword");
        d.name = word("name");
        expect('{');
        while (true) {
            skip_ws();
            if (peek() == '}') {
                ++pos_;
                break;
            }
            if (at_end()) {
                parse_fail(line_, col(), "missing '}'");
            }
            const int key_col = col();
            std::string key = word("field name");
            expect('=');
            Value v = value();
            if (!d.fields.emplace(key, v).second) {
                parse_fail(line_, key_col, "duplicate field '" + key + "'");
            }
        }
        skip_ws();
        if (!at_end()) {
            parse_fail(line_, col(), "trailing text after '}'");
        }
        return d;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    int col() const { return static_cast<int>(pos_) + 1; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            parse_fail(line_, col(), std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string word(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && word_char(s_[pos_])) {
            ++pos_;
        }
        if (start == pos_) {
            parse_fail(line_, col(), std::string("expected ") + what);
        }
        return s_.substr(start, pos_ - start);
    }

    std::string item() {
        skip_ws();
        if (peek() == '"') {
            ++pos_;
            const std::size_t start = pos_;
            while (!at_end() && s_[pos_] != '"') {
                ++pos_;
            }
            if (at_end()) {
                parse_fail(line_, static_cast<int>(start), "unterminated string");
            }
            std::string out = s_.substr(start, pos_ - start);
            ++pos_;
            return out;
        }
        return word("list item");
    }

    Value value() {
        skip_ws();
        Value v;
        v.column = col();
        if (peek() == '[') {
            ++pos_;
            v.is_list = true;
            skip_ws();
            if (peek() == ']') {
                ++pos_;
                return v;
            }
            while (true) {
                v.items.push_back(item());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                parse_fail(line_, col(), "expected ',' or ']'");
            }
            return v;
        }
        v.scalar = item();
        return v;
    }

    const std::string& s_;
    int line_;
    std::size_t pos_ = 0;
};

class Builder {
public:
    explicit Builder(Workspace& ws) : ws_(ws) {}

    void add(const Decl& d) {
        if (!labels_.insert(d.name).second) {
            parse_fail(d.line, 1, "duplicate label '" + d.name + "'");
        }
        if (d.kind == "ring") {
            ring(d);
        } else if (d.kind == "module") {
            module(d);
        } else if (d.kind == "ideal") {
            ideal(d);
        } else {
            parse_fail(d.line, 1, "unknown declaration '" + d.kind + "'");
        }
    }

private:
    const Value& field(const Decl& d, const std::string& key) const {
        auto it = d.fields.find(key);
        if (it == d.fields.end()) {
            parse_fail(d.line, 1, "missing field '" + key + "' in " + d.kind + " " + d.name);
        }
        return it->second;
    }

    bool has(const Decl& d, const std::string& key) const { return d.fields.count(key) > 0; }

    void only(const Decl& d, std::initializer_list<const char*> keys) const {
        std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto& [k, v] : d.fields) {
            if (!ok.count(k)) {
                parse_fail(d.line, v.column, "unexpected field '" + k + "'");
            }
        }
    }

    std::string scalar(const Decl& d, const std::string& key) const {
        const Value& v = field(d, key);
        if (v.is_list) {
            parse_fail(d.line, v.column, "field '" + key + "' takes a single value");
        }
        return v.scalar;
    }

    std::vector<std::string> list(const Decl& d, const std::string& key) const {
        const Value& v = field(d, key);
        if (!v.is_list) {
            parse_fail(d.line, v.column, "field '" + key + "' takes a list");
        }
        return v.items;
    }

    int integer(const Decl& d, const std::string& text, int column) const {
        int out = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            parse_fail(d.line, column, "expected an integer, got '" + text + "'");
        }
        return out;
    }

    // "x^2*y" over the given variables
    std::vector<int> monomial(const Decl& d, const std::vector<std::string>& vars, const std::string& text,
                              int column) const {
        std::vector<int> e(vars.size(), 0);
        std::stringstream ss(text);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            std::string name = factor;
            int pow = 1;
            if (auto c = factor.find('^'); c != std::string::npos) {
                name = factor.substr(0, c);
                pow = integer(d, factor.substr(c + 1), column);
            }
            bool found = false;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == name) {
                    e[i] += pow;
                    found = true;
                }
            }
            if (!found) {
                parse_fail(d.line, column, "unknown variable '" + name + "' in monomial '" + text + "'");
            }
        }
        return e;
    }

    RingPtr ring_ref(const Decl& d) const {
        const std::string name = scalar(d, "ring");
        auto it = ws_.rings.find(name);
        if (it == ws_.rings.end()) {
            parse_fail(d.line, field(d, "ring").column, "unknown ring '" + name + "'");
        }
        return it->second;
    }

    void ring(const Decl& d) {
        only(d, {"family", "p", "vars", "ideal", "gens", "base"});
        RingSpec spec;
        spec.label = d.name;
        const std::string fam = scalar(d, "family");
        spec.p = integer(d, scalar(d, "p"), field(d, "p").column);
        if (fam == "artin") {
            spec.family = Family::Artin;
            spec.vars = list(d, "vars");
            for (const auto& m : list(d, "ideal")) {
                spec.ideal.push_back(monomial(d, spec.vars, m, field(d, "ideal").column));
            }
        } else if (fam == "dvr") {
            spec.family = Family::Dvr;
        } else if (fam == "semigroup") {
            spec.family = Family::Semigroup;
            for (const auto& g : list(d, "gens")) {
                spec.gens.push_back(integer(d, g, field(d, "gens").column));
            }
            if (has(d, "base")) {
                spec.base = integer(d, scalar(d, "base"), field(d, "base").column);
            }
        } else {
            parse_fail(d.line, field(d, "family").column, "unknown family '" + fam + "'");
        }
        ws_.rings.emplace(d.name, Ring::build(spec));
        ws_.ring_order.push_back(d.name);
    }

    void module(const Decl& d) {
        only(d, {"ring", "kind", "gens", "of", "rank"});
        RingPtr R = ring_ref(d);
        const std::string kind = scalar(d, "kind");
        ModulePtr M;
        if (kind == "frac_ideal") {
            M = from_fractional_ideal(parse_frac_ideal(R, list(d, "gens")));
        } else if (kind == "quotient") {
            M = from_quotient(parse_frac_ideal(R, list(d, "gens")));
        } else if (kind == "residue_field") {
            M = residue_field(R);
        } else if (kind == "free") {
            M = free_module(R, integer(d, scalar(d, "rank"), field(d, "rank").column));
        } else if (kind == "canonical") {
            M = canonical_module(R);
        } else if (kind == "direct_sum") {
            std::vector<ModulePtr> parts;
            for (const auto& name : list(d, "of")) {
                auto it = ws_.modules.find(name);
                if (it == ws_.modules.end()) {
                    parse_fail(d.line, field(d, "of").column, "unknown module '" + name + "'");
                }
                if (it->second.module->ring() != R) {
                    parse_fail(d.line, field(d, "of").column, "module '" + name + "' lives over another ring");
                }
                parts.push_back(it->second.module);
            }
            M = direct_sum(parts);
        } else {
            parse_fail(d.line, field(d, "kind").column, "unknown module kind '" + kind + "'");
        }
        ws_.modules.emplace(d.name, WorkspaceModule{scalar(d, "ring"), kind, M});
        ws_.module_order.push_back(d.name);
    }

    void ideal(const Decl& d) {
        only(d, {"ring", "gens"});
        RingPtr R = ring_ref(d);
        ws_.ideals.emplace(d.name, WorkspaceIdeal{scalar(d, "ring"), parse_frac_ideal(R, list(d, "gens"))});
        ws_.ideal_order.push_back(d.name);
    }

    Workspace& ws_;
    std::set<std::string> labels_;
};

} // namespace

const RingPtr& Workspace::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) {
        fail(ErrorCode::InvalidArgument, "unknown ring '" + name + "'");
    }
    return it->second;
}

const ModulePtr& Workspace::module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) {
        fail(ErrorCode::InvalidArgument, "unknown module '" + name + "'");
    }
    return it->second.module;
}

const FracIdeal& Workspace::ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) {
        fail(ErrorCode::InvalidArgument, "unknown ideal '" + name + "'");
    }
    return it->second.ideal;
}

std::vector<std::string> Workspace::modules_over(const std::string& ring) const {
    std::vector<std::string> out;
    for (const auto& name : module_order) {
        if (modules.at(name).ring == ring) {
            out.push_back(name);
        }
    }
    return out;
}

Workspace parse_workspace(const std::string& text) {
    Workspace ws;
    Builder b(ws);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) {
            line.erase(c);
        }
        bool blank = true;
        for (char ch : line) {
            blank = blank && std::isspace(static_cast<unsigned char>(ch));
        }
        if (blank) {
            continue;
        }
        Decl d = LineParser(line, lineno).parse();
        try {
            b.add(d);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) {
                throw;
            }
            fail(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return ws;
}

} // namespace subext
