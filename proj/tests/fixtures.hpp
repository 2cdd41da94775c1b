#pragma once

#include "regfactor/generators.hpp"

namespace fixture {

// r=1, k=1, |T|=3, |S|=1, one blistered S-T edge: cubic, three cut-edges,
// no 2-factor.
inline regfactor::ExtremalConstruction figure1() {
    regfactor::ExtremalParams p;
    p.r = 1;
    p.k = 1;
    p.t_size = 3;
    p.s_size = 1;
    p.blisters = 1;
    return regfactor::general_extremal(p, 0);
}

} // namespace fixture
