#pragma once

#include <string>
#include <vector>

#include "tworough/classification.hpp"
#include "tworough/relation.hpp"

namespace fixtures {

// The 5x6 worked example: U = {x1..x5}, V = {y1..y6}.
inline tworough::BinaryRelation worked_example() {
    return tworough::new_relation(tworough::Universes::indexed(5, 6),
                                  std::vector<std::vector<int>>{{1, 1, 0, 0, 1, 0},
                                                                {0, 0, 1, 0, 0, 1},
                                                                {0, 1, 0, 1, 0, 0},
                                                                {1, 0, 1, 1, 1, 1},
                                                                {1, 1, 0, 0, 1, 0}});
}

inline tworough::Subset vs(const tworough::BinaryRelation& r, std::vector<std::string> labels) {
    return tworough::Subset::of_labels(r.universes_ptr(), tworough::Side::V, labels);
}

inline tworough::Subset us(const tworough::BinaryRelation& r, std::vector<std::string> labels) {
    return tworough::Subset::of_labels(r.universes_ptr(), tworough::Side::U, labels);
}

inline tworough::Classification classes(const tworough::BinaryRelation& r,
                                        std::vector<std::vector<std::string>> blocks) {
    std::vector<tworough::NamedBlock> named;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        named.push_back({"Y" + std::to_string(i + 1), vs(r, blocks[i])});
    }
    return tworough::validate_classification(std::move(named));
}

}  // namespace fixtures

namespace fixtures {

// |U| = 3, |V| = 2, definable under {{y1}, {y2}}: quality over |V| is 3/2.
inline tworough::BinaryRelation wide_u_relation() {
    return tworough::new_relation(tworough::Universes::indexed(3, 2),
                                  std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 0}});
}

// |U| = 2, |V| = 3, definable under {{y1, y2}, {y3}}: quality over |V| is 2/3.
inline tworough::BinaryRelation wide_v_relation() {
    return tworough::new_relation(tworough::Universes::indexed(2, 3),
                                  std::vector<std::vector<int>>{{1, 1, 0}, {0, 0, 1}});
}

// Non-serial: x1 is solitary, x2 sees everything. Under {{y1}, {y2}} the
// summed lower and upper sizes coincide although no block is exact.
inline tworough::BinaryRelation solitary_relation() {
    return tworough::new_relation(tworough::Universes::indexed(2, 2),
                                  std::vector<std::vector<int>>{{0, 0}, {1, 1}});
}

}  // namespace fixtures
