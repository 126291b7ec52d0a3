#ifndef DZK_BUMP_HPP
#define DZK_BUMP_HPP

namespace dzk {

// Smooth transition built from exp(-1/r) gluing: 0 for tau <= 0, 1 for
// tau >= 1, C-infinity in between.
double smooth_step(double tau);

// Even cutoff with values in [0,1],
//   psi1: supported on {|r| in [1/4, 4]}, identically 1 on {|r| in [1/2, 2]},
//         ramps on [1/4, 1/2] and [2, 4];
//   psi0: supported on [-2, 2], identically 1 on [-1, 1], ramp on [1, 2].
double psi1(double r);
double psi0(double r);

inline double psi1_sq(double r) {
    double v = psi1(r);
    return v * v;
}
inline double psi0_sq(double r) {
    double v = psi0(r);
    return v * v;
}

} // namespace dzk

#endif
