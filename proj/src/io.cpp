#include "coset/io.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace coset {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct file_line {
    std::string section;
    std::string text;
    int number = 0;
};

std::vector<file_line> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::vector<file_line> out;
    std::string line, section;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw parse_error(path + ":" + std::to_string(number) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw parse_error(path + ":" + std::to_string(number) + ": empty section name");
            continue;
        }
        out.push_back({section, line, number});
    }
    return out;
}

[[noreturn]] void fail_at(const std::string& path, int number, const std::string& what) {
    throw parse_error(path + ":" + std::to_string(number) + ": " + what);
}

std::pair<std::string, std::string> key_value(const std::string& path, const file_line& ln) {
    std::size_t eq = ln.text.find('=');
    if (eq == std::string::npos) fail_at(path, ln.number, "expected key = value");
    return {trim(ln.text.substr(0, eq)), trim(ln.text.substr(eq + 1))};
}

long parse_long(const std::string& path, int number, const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) fail_at(path, number, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail_at(path, number, "bad integer '" + s + "'");
    }
}

rat parse_rat_at(const std::string& path, int number, const std::string& s) {
    try {
        return parse_rat(s);
    } catch (const std::exception&) {
        fail_at(path, number, "bad rational '" + s + "'");
    }
}

std::vector<long> parse_label_list(const std::string& path, int number, const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(parse_long(path, number, tok));
    if (out.empty()) fail_at(path, number, "empty label list");
    return out;
}

} // namespace

embedding_spec read_embedding_file(const std::string& path) {
    embedding_spec spec;
    std::vector<std::string> ambient_names, level_list;
    std::vector<std::pair<std::size_t, std::string>> sub_names;
    ratmat projection;
    adjoint_branching declared;
    bool have_branching = false;

    for (const file_line& ln : read_lines(path)) {
        if (ln.section.empty()) {
            auto [key, value] = key_value(path, ln);
            if (key == "name") spec.name = value;
            else fail_at(path, ln.number, "unknown key '" + key + "'");
        } else if (ln.section == "ambient") {
            auto [key, value] = key_value(path, ln);
            if (key == "algebra") ambient_names = split(value, ',');
            else if (key == "levels") level_list = split(value, ',');
            else fail_at(path, ln.number, "unknown key '" + key + "'");
        } else if (ln.section.rfind("sub.", 0) == 0) {
            long idx = parse_long(path, ln.number, ln.section.substr(4));
            if (idx < 1) fail_at(path, ln.number, "sub sections count from 1");
            auto [key, value] = key_value(path, ln);
            if (key == "algebra") sub_names.push_back({(std::size_t)idx, value});
            else fail_at(path, ln.number, "unknown key '" + key + "'");
        } else if (ln.section == "projection") {
            auto [key, value] = key_value(path, ln);
            if (key != "row") fail_at(path, ln.number, "unknown key '" + key + "'");
            ratvec row;
            std::istringstream is(value);
            std::string tok;
            while (is >> tok) row.push_back(parse_rat_at(path, ln.number, tok));
            if (row.empty()) fail_at(path, ln.number, "empty projection row");
            projection.push_back(std::move(row));
        } else if (ln.section == "branching") {
            have_branching = true;
            branch_component comp;
            bool have_labels = false;
            for (const std::string& part : split(ln.text, ',')) {
                std::size_t eq = part.find('=');
                if (eq == std::string::npos) fail_at(path, ln.number, "expected key = value in branching row");
                std::string key = trim(part.substr(0, eq)), value = trim(part.substr(eq + 1));
                if (key == "labels") {
                    for (const std::string& piece : split(value, '|'))
                        comp.labels.push_back(parse_label_list(path, ln.number, piece));
                    have_labels = true;
                } else if (key == "mult") {
                    comp.mult = parse_long(path, ln.number, value);
                    if (comp.mult < 1) fail_at(path, ln.number, "mult must be positive");
                } else if (key == "inside") {
                    if (value == "true") comp.inside = true;
                    else if (value == "false") comp.inside = false;
                    else fail_at(path, ln.number, "inside must be true or false");
                } else {
                    fail_at(path, ln.number, "unknown key '" + key + "'");
                }
            }
            if (!have_labels) fail_at(path, ln.number, "branching row without labels");
            declared.components.push_back(std::move(comp));
        } else {
            fail_at(path, ln.number, "unknown section [" + ln.section + "]");
        }
    }

    if (ambient_names.empty()) throw parse_error(path + ": missing [ambient] algebra");
    if (level_list.size() != ambient_names.size())
        throw parse_error(path + ": levels list does not match the ambient algebra list");
    for (std::size_t i = 0; i < ambient_names.size(); ++i) {
        leveled_component comp;
        comp.alg = parse_algebra(ambient_names[i]);
        comp.level = parse_long(path, 0, level_list[i]);
        if (comp.level < 1) throw parse_error(path + ": ambient level must be positive");
        spec.ambient.components.push_back(std::move(comp));
    }

    if (sub_names.empty()) throw parse_error(path + ": missing [sub.1] section");
    std::sort(sub_names.begin(), sub_names.end());
    for (std::size_t i = 0; i < sub_names.size(); ++i) {
        if (sub_names[i].first != i + 1)
            throw parse_error(path + ": sub sections must be numbered 1.." + std::to_string(sub_names.size()));
        spec.sub.push_back(parse_algebra(sub_names[i].second));
    }

    if (!projection.empty()) {
        long sub_rank = sub_total_rank(spec);
        long ambient_rank = 0;
        for (const leveled_component& comp : spec.ambient.components) ambient_rank += comp.alg.rank;
        if ((long)projection.size() != sub_rank)
            throw parse_error(path + ": projection needs one row per sub Dynkin label");
        for (const ratvec& row : projection)
            if ((long)row.size() != ambient_rank)
                throw parse_error(path + ": projection row length does not match the ambient rank");
        spec.projection = std::move(projection);
    }
    if (have_branching) {
        for (const branch_component& comp : declared.components)
            if (comp.labels.size() != spec.sub.size())
                throw parse_error(path + ": branching row needs one label group per sub ideal");
        spec.declared = std::move(declared);
    }
    if (!spec.projection && !spec.declared)
        throw parse_error(path + ": need a [projection] or a [branching] section");
    if (spec.name.empty()) spec.name = path;
    return spec;
}

branching_claim read_branching_claim(const std::string& path) {
    branching_claim claim;
    bool k1_set = false, k2_set = false;
    for (const file_line& ln : read_lines(path)) {
        if (ln.section == "product") {
            auto [key, value] = key_value(path, ln);
            long v = parse_long(path, ln.number, value);
            if (key == "k1") { claim.k1 = v; k1_set = true; }
            else if (key == "l1") claim.l1 = v;
            else if (key == "k2") { claim.k2 = v; k2_set = true; }
            else if (key == "l2") claim.l2 = v;
            else fail_at(path, ln.number, "unknown key '" + key + "'");
        } else if (ln.section == "rows") {
            std::vector<std::string> halves = split(ln.text, ';');
            if (halves.size() != 2) fail_at(path, ln.number, "expected target=... ; coset=...");
            auto [tkey, tval] = key_value(path, {ln.section, halves[0], ln.number});
            if (tkey != "target") fail_at(path, ln.number, "row must start with target=");
            branch_row_claim row;
            row.target = parse_long(path, ln.number, tval);
            std::size_t eq = halves[1].find('=');
            if (eq == std::string::npos || trim(halves[1].substr(0, eq)) != "coset")
                fail_at(path, ln.number, "row must continue with coset=");
            std::string list = trim(halves[1].substr(eq + 1));
            std::size_t pos = 0;
            while (pos < list.size()) {
                std::size_t open = list.find('(', pos);
                if (open == std::string::npos) break;
                std::size_t close = list.find(')', open);
                if (close == std::string::npos) fail_at(path, ln.number, "unterminated coset pair");
                std::vector<std::string> fields = split(list.substr(open + 1, close - open - 1), ',');
                if (fields.size() != 2) fail_at(path, ln.number, "coset pair needs (h, mult)");
                rat h = parse_rat_at(path, ln.number, fields[0]);
                long mult = parse_long(path, ln.number, fields[1]);
                if (mult < 1) fail_at(path, ln.number, "coset multiplicity must be positive");
                row.coset.push_back({h, mult});
                pos = close + 1;
            }
            if (row.coset.empty()) fail_at(path, ln.number, "empty coset list");
            claim.rows.push_back(std::move(row));
        } else {
            fail_at(path, ln.number, "unknown section [" + ln.section + "]");
        }
    }
    if (!k1_set || !k2_set) throw parse_error(path + ": missing k1/k2 in [product]");
    if (claim.rows.empty()) throw parse_error(path + ": no claim rows");
    return claim;
}

namespace {

std::vector<sector_entry> parse_bundle(const std::string& path, int number, const std::string& text) {
    std::vector<sector_entry> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('(', pos);
        if (open == std::string::npos) {
            if (!trim(text.substr(pos)).empty() && trim(text.substr(pos)) != "+")
                fail_at(path, number, "stray text in bundle: '" + trim(text.substr(pos)) + "'");
            break;
        }
        std::size_t close = text.find(')', open);
        if (close == std::string::npos) fail_at(path, number, "unterminated sector entry");
        std::vector<std::string> fields = split(text.substr(open + 1, close - open - 1), ',');
        if (fields.size() != 3) fail_at(path, number, "sector entry needs (label, h=..., d=...)");
        sector_entry entry;
        entry.label = fields[0];
        if (entry.label.empty()) fail_at(path, number, "empty sector label");
        for (int f = 1; f <= 2; ++f) {
            std::size_t eq = fields[f].find('=');
            if (eq == std::string::npos) fail_at(path, number, "expected h=/d= in sector entry");
            std::string key = trim(fields[f].substr(0, eq)), value = trim(fields[f].substr(eq + 1));
            if (key == "h") entry.h = parse_rat_at(path, number, value);
            else if (key == "d") {
                try {
                    std::size_t used = 0;
                    entry.d = std::stod(value, &used);
                    if (used != value.size()) throw std::invalid_argument(value);
                } catch (const std::logic_error&) {
                    fail_at(path, number, "bad dimension '" + value + "'");
                }
            } else fail_at(path, number, "unknown sector field '" + key + "'");
        }
        pos = close + 1;
        // optional multiplicity suffix *n
        std::size_t star = text.find_first_not_of(" \t", pos);
        if (star != std::string::npos && text[star] == '*') {
            std::size_t end = text.find_first_of(" \t+", star + 1);
            std::string mult = text.substr(star + 1, end == std::string::npos ? std::string::npos : end - star - 1);
            entry.mult = parse_long(path, number, mult);
            if (entry.mult < 1) fail_at(path, number, "multiplicity must be positive");
            pos = end == std::string::npos ? text.size() : end;
        }
        std::size_t plus = text.find_first_not_of(" \t", pos);
        if (plus != std::string::npos) {
            if (text[plus] != '+') fail_at(path, number, "expected + between sector entries");
            pos = plus + 1;
        } else {
            pos = text.size();
        }
        out.push_back(std::move(entry));
    }
    if (out.empty()) fail_at(path, number, "empty bundle");
    return out;
}

} // namespace

std::vector<table_row> read_coupling_table(const std::string& path) {
    std::vector<table_row> rows;
    for (const file_line& ln : read_lines(path)) {
        if (!ln.section.empty()) fail_at(path, ln.number, "coupling tables have no sections");
        std::string text = ln.text;
        table_row row;
        if (text.rfind("vacuum ", 0) == 0) {
            row.vacuum = true;
            text = trim(text.substr(7));
        }
        if (text.rfind("A:", 0) != 0) fail_at(path, ln.number, "row must start with A:");
        std::size_t bar = text.find('|');
        if (bar == std::string::npos) fail_at(path, ln.number, "row needs an A: ... | C: ... split");
        std::string a_text = trim(text.substr(2, bar - 2));
        std::string c_text = trim(text.substr(bar + 1));
        if (c_text.rfind("C:", 0) != 0) fail_at(path, ln.number, "second half must start with C:");
        c_text = trim(c_text.substr(2));
        row.a_side = parse_bundle(path, ln.number, a_text);
        row.c_side = parse_bundle(path, ln.number, c_text);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error(path + ": empty coupling table");
    return rows;
}

std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string render_table(const output_table& t, bool color) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    widen(t.header);
    for (const auto& row : t.rows) widen(row);
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row, bool bold) {
        for (std::size_t i = 0; i < width.size(); ++i) {
            std::string cell = i < row.size() ? row[i] : "";
            if (i) os << "  ";
            if (bold && color) os << "\033[1m";
            os << cell;
            if (bold && color) os << "\033[0m";
            if (i + 1 < width.size()) os << std::string(width[i] - cell.size(), ' ');
        }
        os << "\n";
    };
    emit(t.header, true);
    std::size_t total = 0;
    for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
    os << std::string(total, '-') << "\n";
    for (const auto& row : t.rows) emit(row, false);
    return os.str();
}

std::string render_csv(const output_table& t) {
    std::ostringstream os;
    auto cell = [&](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) {
            os << s;
            return;
        }
        os << '"';
        for (char ch : s) {
            if (ch == '"') os << '"';
            os << ch;
        }
        os << '"';
    };
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            cell(row[i]);
        }
        os << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
}

bool color_enabled() {
    const char* env = std::getenv("COSETKIT_COLOR");
    return env && std::string(env) == "1";
}

} // namespace coset
