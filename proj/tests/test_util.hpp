#pragma once

#include <initializer_list>

#include "crossfam/family.hpp"

inline crossfam::SetFamily fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
    return crossfam::SetFamily(n, sets);
}

inline crossfam::SetWord word(int n, std::initializer_list<int> elems) {
    return crossfam::SetWord::of(elems, n);
}
