#pragma once

#include "sylreg/ctable.hpp"

namespace sylreg {

/// Exact character table of SL_2(q), q an odd prime power >= 5.
///
/// Classes: 1, z = -1, two unipotent classes u/u', their z-multiples, split
/// torus classes a^l (l = 1..(q-3)/2) and nonsplit torus classes b^m
/// (m = 1..(q-1)/2). Rows: trivial, Steinberg, principal series of degree
/// q+1, discrete series of degree q-1 and the four half characters of
/// degrees (q+1)/2 and (q-1)/2 whose unipotent values are (+-1 +- sqrt(eq))/2
/// with e = (-1)^((q-1)/2).
CharacterTable sl2_table(long q);

/// PSL_2(q) derived from SL_2(q) structurally: rows trivial on the centre
/// are kept, classes are fused along multiplication by z.
CharacterTable psl2_table(long q);

}  // namespace sylreg
