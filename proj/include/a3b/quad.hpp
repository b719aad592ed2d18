#pragma once

// The spherical quadrilateral with three edges of length a and one of
// length b.  All angles and edge lengths are stored in units of pi:
// a value of 2/3 means an angle of 2*pi/3 radians (or an arc of the same
// measure).  The corners are listed in cyclic order alpha, beta, gamma,
// delta; side s joins corners s and s+1 (mod 4), so sides 0, 1, 2 have
// length a and side 3 (from the delta corner back to the alpha corner)
// has length b.

#include <array>
#include <optional>

#include "a3b/rational.hpp"

namespace a3b {

struct Quadrilateral {
    double alpha = 0, beta = 0, gamma = 0, delta = 0; // interior angles, pi units
    double a = 0, b = 0;                              // edge arc lengths, pi units

    // Exact affine forms of the four angles over the construction's free
    // parameters, when known.  Used by the validator to verify vertex angle
    // sums exactly; in particular every angle that is a rational multiple of
    // pi is handled by exact rational arithmetic.
    std::optional<std::array<AffineAngle, 4>> exact;

    double angle(int corner) const {
        switch (corner & 3) {
            case 0: return alpha;
            case 1: return beta;
            case 2: return gamma;
            default: return delta;
        }
    }
    // Length of side s (joining corners s and s+1).
    double side(int s) const { return (s & 3) == 3 ? b : a; }
};

} // namespace a3b
