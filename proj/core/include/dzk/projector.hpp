#ifndef DZK_PROJECTOR_HPP
#define DZK_PROJECTOR_HPP

#include "dzk/field.hpp"

namespace dzk {

// Dyadic Littlewood-Paley blocks: index 0 covers |r| in [0,1), index j >= 1
// covers |r| in [2^{j-1}, 2^j). The blocks tile [0, inf), so the projectors
// below form a complete orthogonal partition of the spectrum.
bool in_dyadic_block(int j, double r);

// Smallest j whose block contains |r|.
int dyadic_block_of(double r);

// Sharp cutoff Q_x^j Q_y^k: zeroes every coefficient whose (|xi|, |n|) falls
// outside the (j,k) block. Idempotent; distinct blocks are orthogonal.
// Nyquist rows are kept (the indicator partition must sum to the identity).
SpectralField lp_project(const SpectralField& f, int j, int k);

} // namespace dzk

#endif
