#pragma once

// Text formats.
//
// Relation file:
//   # comment lines start with '#'; blank lines are ignored
//   V: y1 y2 y3          <- first significant line, the V labels
//   x1: 1 0 1            <- one line per element of U, |V| cells of 0/1
//   x2: 0 0 0
//
// Classification file: one block per line, "<name>: <v-labels...>".
// Subsets on the command line: comma-separated labels, e.g. "y1,y3".

#include <string>
#include <string_view>
#include <vector>

#include "tworough/classification.hpp"
#include "tworough/relation.hpp"

namespace tworough {

struct RelationDocument {
    UniversesPtr universes;
    std::vector<Bitset> rows;
    std::string source;  // path or "<inline>"; not part of equality

    BinaryRelation to_relation() const;
    static RelationDocument from_relation(const BinaryRelation& r, std::string source = "<inline>");

    friend bool operator==(const RelationDocument& a, const RelationDocument& b) {
        return same_universes(a.universes, b.universes) && a.rows == b.rows;
    }
};

// Throws ParseError (1-based line and column) on: missing V header,
// invalid or duplicate label, non-0/1 cell, row-width mismatch, no rows.
RelationDocument parse_relation_file(std::string_view text, std::string source = "<inline>");
std::string render_relation(const RelationDocument& doc);
std::string render_relation(const BinaryRelation& r);

// Blocks in file order; validation is left to validate_classification.
// Throws ParseError on unknown labels, duplicate block names and lines
// without ':'.
std::vector<NamedBlock> parse_classification_file(std::string_view text,
                                                  const UniversesPtr& universes);

// "y1,y3" -> {y1, y3}. Empty text is the empty set. Throws LookupError.
Subset parse_subset_list(std::string_view text, const UniversesPtr& universes, Side side);

// Throws Error when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace tworough
