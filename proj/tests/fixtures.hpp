#pragma once

#include <array>
#include <string>

// A worked eight-element equivalence class of shape (1,4,3), used as a
// golden fixture across the tests: its tableaux in diagram order (index 0
// the source, index 7 the sink) and its nine labeled Hasse edges.
namespace fixtures {

inline const std::array<std::string, 8> kWorkedClassTableaux = {
    "1 | 6 5 4 3 | 8 7 2",  // 0 source
    "2 | 6 5 4 3 | 8 7 1",  // 1
    "1 | 6 5 4 2 | 8 7 3",  // 2
    "3 | 6 5 4 2 | 8 7 1",  // 3
    "2 | 6 5 4 1 | 8 7 3",  // 4
    "4 | 6 5 3 2 | 8 7 1",  // 5
    "3 | 6 5 4 1 | 8 7 2",  // 6
    "4 | 6 5 3 1 | 8 7 2",  // 7 sink
};

struct WorkedClassEdge {
    int from;
    int label;
    int to;
};

inline const std::array<WorkedClassEdge, 9> kWorkedClassEdges = {{
    {0, 1, 1},
    {0, 2, 2},
    {1, 2, 3},
    {2, 1, 4},
    {3, 3, 5},
    {3, 1, 6},
    {4, 2, 6},
    {5, 1, 7},
    {6, 3, 7},
}};

inline const std::string kWorkedClassColumnWord = "16857423";

}  // namespace fixtures
