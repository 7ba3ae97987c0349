#include "tworough/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace tworough {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text, std::size_t first_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back({text.substr(start, i - start), first_column + start});
        }
    }
    return out;
}

// Non-blank, non-comment lines with their numbers.
std::vector<Line> significant_lines(std::string_view text, std::size_t& last_line) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && pos > 0) {
            break;  // nothing after the final newline
        }
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++number;
        std::size_t lead = 0;
        while (lead < line.size() && is_space(line[lead])) {
            ++lead;
        }
        if (lead < line.size() && line[lead] != '#') {
            out.push_back({line, number});
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    last_line = number;
    return out;
}

// Splits "<label>: rest" and validates the label.
std::pair<Token, std::size_t> split_head(const Line& line, const char* what) {
    const std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(line.number, 1, std::string("expected '<") + what + ">: ...'");
    }
    const auto head = tokenize(line.text.substr(0, colon), 1);
    if (head.size() != 1) {
        throw ParseError(line.number, head.empty() ? colon + 1 : head[1].column,
                         std::string("expected a single ") + what + " before ':'");
    }
    if (!Universes::is_valid_label(head[0].text)) {
        throw ParseError(line.number, head[0].column,
                         "invalid label '" + std::string(head[0].text) + "'");
    }
    return {head[0], colon};
}

}  // namespace

BinaryRelation RelationDocument::to_relation() const { return new_relation(universes, rows); }

RelationDocument RelationDocument::from_relation(const BinaryRelation& r, std::string source) {
    return {r.universes_ptr(), r.rows(), std::move(source)};
}

RelationDocument parse_relation_file(std::string_view text, std::string source) {
    std::size_t last_line = 0;
    const auto lines = significant_lines(text, last_line);
    if (lines.empty()) {
        throw ParseError(std::max<std::size_t>(last_line, 1), 1, "missing 'V:' header");
    }

    const Line& header = lines.front();
    std::size_t lead = 0;
    while (is_space(header.text[lead])) {
        ++lead;
    }
    if (header.text.substr(lead, 2) != "V:") {
        throw ParseError(header.number, lead + 1, "missing 'V:' header");
    }
    std::vector<std::string> v_labels;
    std::set<std::string_view> seen;
    for (const Token& t : tokenize(header.text.substr(lead + 2), lead + 3)) {
        if (!Universes::is_valid_label(t.text)) {
            throw ParseError(header.number, t.column, "invalid V label '" + std::string(t.text) + "'");
        }
        if (!seen.insert(t.text).second) {
            throw ParseError(header.number, t.column, "duplicate V label '" + std::string(t.text) + "'");
        }
        v_labels.emplace_back(t.text);
    }
    if (v_labels.empty()) {
        throw ParseError(header.number, header.text.size() + 1, "'V:' header lists no labels");
    }

    std::vector<std::string> u_labels;
    std::vector<Bitset> rows;
    seen.clear();
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto [label, colon] = split_head(line, "u-label");
        if (!seen.insert(label.text).second) {
            throw ParseError(line.number, label.column,
                             "duplicate U label '" + std::string(label.text) + "'");
        }
        const auto cells = tokenize(line.text.substr(colon + 1), colon + 2);
        Bitset row(v_labels.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const Token& c = cells[j];
            if (c.text != "0" && c.text != "1") {
                throw ParseError(line.number, c.column,
                                 "cell '" + std::string(c.text) + "' is not 0 or 1");
            }
            if (j < v_labels.size()) {
                row.set(j, c.text == "1");
            }
        }
        if (cells.size() != v_labels.size()) {
            const std::size_t column =
                cells.size() > v_labels.size() ? cells[v_labels.size()].column : line.text.size() + 1;
            throw ParseError(line.number, column,
                             "row '" + std::string(label.text) + "' has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(v_labels.size()));
        }
        u_labels.emplace_back(label.text);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(last_line, 1, "relation has no rows; U must not be empty");
    }
    return {Universes::create(std::move(u_labels), std::move(v_labels)), std::move(rows),
            std::move(source)};
}

std::string render_relation(const RelationDocument& doc) {
    std::string out = "V:";
    for (const auto& l : doc.universes->labels(Side::V)) {
        out += " " + l;
    }
    out += "\n";
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        out += doc.universes->label(Side::U, i) + ":";
        for (std::size_t j = 0; j < doc.rows[i].size(); ++j) {
            out += doc.rows[i].test(j) ? " 1" : " 0";
        }
        out += "\n";
    }
    return out;
}

std::string render_relation(const BinaryRelation& r) {
    return render_relation(RelationDocument::from_relation(r));
}

std::vector<NamedBlock> parse_classification_file(std::string_view text,
                                                  const UniversesPtr& universes) {
    std::size_t last_line = 0;
    std::vector<NamedBlock> blocks;
    std::set<std::string_view> names;
    for (const Line& line : significant_lines(text, last_line)) {
        const auto [name, colon] = split_head(line, "block-name");
        if (!names.insert(name.text).second) {
            throw ParseError(line.number, name.column,
                             "duplicate block name '" + std::string(name.text) + "'");
        }
        Subset members(universes, Side::V);
        for (const Token& t : tokenize(line.text.substr(colon + 1), colon + 2)) {
            if (!universes->contains(Side::V, t.text)) {
                throw ParseError(line.number, t.column, "unknown V label '" + std::string(t.text) + "'");
            }
            members |= Subset::of_labels(universes, Side::V, {std::string(t.text)});
        }
        blocks.push_back({std::string(name.text), std::move(members)});
    }
    return blocks;
}

Subset parse_subset_list(std::string_view text, const UniversesPtr& universes, Side side) {
    Subset out(universes, side);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && is_space(item.front())) {
            item.remove_prefix(1);
        }
        while (!item.empty() && is_space(item.back())) {
            item.remove_suffix(1);
        }
        if (!item.empty()) {
            out |= Subset::of_labels(universes, side, {std::string(item)});
        } else if (end != text.size() || pos != 0) {
            throw LookupError("empty label in list '" + std::string(text) + "'");
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tworough
