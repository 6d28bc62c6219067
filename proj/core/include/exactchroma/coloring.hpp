#ifndef EXACTCHROMA_COLORING_HPP
#define EXACTCHROMA_COLORING_HPP

#include <vector>

namespace exactchroma {

/// Per-vertex colors in 0..palette-1.
struct Coloring {
    std::vector<int> color;
    int palette = 0;
};

}  // namespace exactchroma

#endif
